import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_kostka.combinatorics import (
    RhoShape,
    bicompositions,
    conjugate,
    dominates,
    ell_p,
    is_p_restricted,
    lambda_block_size,
    lambda_set,
    labels,
    multinomial,
    padic_expansion,
    partitions,
    rho_shapes,
    scale,
    sylow_shape,
    validate_prime,
    vertex_shape,
)


def test_validate_prime():
    assert validate_prime(3) == 3
    for bad in (2, 4, 9, 1, 0, -3):
        with pytest.raises(ValueError):
            validate_prime(bad)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    # |P^2(n)| = sum_k p(k) p(n-k)
    assert [len(list(bicompositions(n))) for n in range(6)] == [1, 2, 5, 10, 20, 36]


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


def test_dominance_examples():
    assert dominates(((3,), ()), ((2, 1), ()))
    assert dominates(((1,), ()), ((), (1,)))
    assert not dominates(((), (1,)), ((1,), ()))
    assert dominates(((2,), (1,)), ((1, 1), (1,)))
    assert not dominates(((1, 1), (1,)), ((2,), (1,)))
    with pytest.raises(ValueError):
        dominates(((2,), ()), ((1,), ()))


@pytest.mark.parametrize(
    "lam,p,layers",
    [
        ((4,), 3, [(1,), (1,)]),
        ((9, 3), 3, [(), (3, 1)]),
        ((3, 3), 3, [(), (1, 1)]),
        ((2, 1), 3, [(2, 1)]),
        ((), 3, []),
        ((6, 1), 5, [(1, 1), (1,)]),
    ],
)
def test_padic_expansion(lam, p, layers):
    assert padic_expansion(lam, p) == layers


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 40), max_size=5), st.sampled_from([3, 5, 7]))
def test_padic_round_trip(parts, p):
    lam = tuple(sorted(parts, reverse=True))
    layers = padic_expansion(lam, p)
    assert all(is_p_restricted(x, p) for x in layers)
    total = [0] * len(lam)
    for i, layer in enumerate(layers):
        for j, x in enumerate(layer):
            total[j] += p**i * x
    assert tuple(total) == lam


def test_vertex_shape_examples():
    assert vertex_shape((2, 1), (), 3) == RhoShape((3,), 3)
    assert vertex_shape((1,), (1,), 3) == RhoShape((1, 1), 3)
    assert str(vertex_shape((), (1, 1), 3)) == "(3,3)"
    assert vertex_shape((3,), (3,), 3) == RhoShape((0, 1, 1), 3)
    assert ell_p((), (), 3) == 0
    assert ell_p((3,), (3,), 3) == 2


def test_rho_shapes_sorted_by_order():
    shapes = rho_shapes(9, 3)
    assert shapes[0] == RhoShape((0, 0, 1), 3)
    assert shapes[-1] == RhoShape((9,), 3)
    assert all(s.degree == 9 for s in shapes)
    orders = [s.log_order for s in shapes]
    assert orders == sorted(orders, reverse=True)
    assert sylow_shape(12, 3) == RhoShape((0, 1, 1), 3)
    assert RhoShape((3, 2), 3).layout() == (1, 1, 1, 3, 3)


def test_labels():
    L = labels(3, 3)
    assert L == (((3,), ()), ((2, 1), ()), ((1, 1, 1), ()), ((), (3,)))
    assert len(labels(6, 3)) == 11 + 3 + 2


def test_lambda_set_example():
    # Q_2 = P_rho with rho = (1,1,1,3,3) acting on ((2,1)|(6))
    rho = RhoShape((3, 2), 3)
    entries = lambda_set(((2, 1), (6,)), rho)
    assert entries == [(((2, 1), ()), ((), (2,)))]
    assert lambda_block_size(entries[0]) == 3
    assert lambda_set(((2, 1), (6,)), RhoShape((0, 3), 3)) == []


def test_lambda_empty_cases():
    assert lambda_set(((2, 2), ()), RhoShape((1, 1), 3)) == []
    assert multinomial([2, 1]) == 3
    assert scale(3, (1, 1)) == (3, 3)
