import numpy as np
import pytest

from signed_kostka.combinatorics import RhoShape, lambda_block_size, lambda_set, multinomial
from signed_kostka.tabloids import (
    Tabloid,
    TabloidBasis,
    act,
    canonicalize,
    concat_tabloids,
    enumerate_tabloids,
    fixed_tabloids,
    perm_from_cycles,
    perm_inv,
    perm_mul,
    rho_type,
    theta,
)

SHAPE = ((2, 1), (6,))
Q1 = [perm_from_cycles([(1, 2, 3)], 9), perm_from_cycles([(4, 5, 6)], 9), perm_from_cycles([(7, 8, 9)], 9)]
Q2 = Q1[1:]


def tab(a_rows, b_rows, shape=SHAPE):
    return Tabloid(shape, tuple(tuple(r) for r in a_rows + b_rows))


def test_basis_sizes():
    assert len(enumerate_tabloids(((2, 1), ()))) == 3
    assert TabloidBasis(SHAPE).size == 252
    assert TabloidBasis(((), (9, 3))).size == 220


def test_signed_action_example():
    v = tab([(1, 3), (2,)], [(4, 5, 6, 7, 8, 9)])
    g = perm_from_cycles([(2, 3), (4, 5)], 9)
    sign, u = act(g, v)
    assert sign == -1
    assert u == tab([(1, 2), (3,)], [(4, 5, 6, 7, 8, 9)])
    assert str(v) == "{(13|2)|(456789)}"


def test_action_axioms():
    rng = np.random.default_rng(0)
    ts = enumerate_tabloids(((1, 1), (2, 1)))
    for _ in range(20):
        g = tuple(int(x) + 1 for x in rng.permutation(5))
        h = tuple(int(x) + 1 for x in rng.permutation(5))
        t = ts[rng.integers(len(ts))]
        s1, t1 = act(h, t)
        s2, t2 = act(g, t1)
        s3, t3 = act(perm_mul(g, h), t)
        assert (s1 * s2, t2) == (s3, t3)
        s4, t4 = act(perm_inv(g), act(g, t)[1])
        assert t4 == t and s4 * act(g, t)[0] == 1
    assert act(tuple(range(1, 6)), ts[0]) == (1, ts[0])


def test_canonicalize_sign():
    sign, t = canonicalize(((), (2,)), [(2, 1)])
    assert sign == -1 and t.rows == ((1, 2),)
    with pytest.raises(ValueError):
        act((1, 2), tab([(1, 3), (2,)], [(4, 5, 6, 7, 8, 9)]))


def test_fixed_tabloids_example():
    fixed = fixed_tabloids(SHAPE, Q2)
    want = {
        tab([(1, 2), (3,)], [(4, 5, 6, 7, 8, 9)]),
        tab([(1, 3), (2,)], [(4, 5, 6, 7, 8, 9)]),
        tab([(2, 3), (1,)], [(4, 5, 6, 7, 8, 9)]),
    }
    assert set(fixed) == want and len(fixed) == 3
    assert fixed_tabloids(SHAPE, Q1) == []
    assert len(fixed_tabloids(((2, 1), ()), [])) == 3


def test_rho_type_and_theta():
    rho = RhoShape((3, 2), 3)
    t = tab([(1, 2), (3,)], [(4, 5, 6, 7, 8, 9)])
    assert rho_type(t, rho) == (((2, 1), ()), ((), (2,)))
    parts = theta(t, rho)
    assert parts[0].shape == ((2, 1), ())
    assert parts[1].shape == ((), (2,))
    with pytest.raises(ValueError):
        rho_type(tab([(1, 4), (2,)], [(3, 5, 6, 7, 8, 9)]), rho)


def test_block_sizes_match_type_counts():
    rho = RhoShape((3, 2), 3)
    for shape in [((2, 1), (6,)), ((4, 2), (3,)), ((3,), (3, 3)), ((1, 1, 1), (3, 3))]:
        counts = {}
        basis = TabloidBasis(shape)
        gens = [perm_from_cycles([(4, 5, 6)], 9), perm_from_cycles([(7, 8, 9)], 9)]
        for i in basis.fixed_indices(gens):
            key = rho_type(basis.tabloid(i), rho)
            counts[key] = counts.get(key, 0) + 1
        want = {e: lambda_block_size(e) for e in lambda_set(shape, rho)}
        assert counts == want


def test_concat():
    t1 = Tabloid(((1,), ()), ((1,),))
    t2 = Tabloid(((1,), (1,)), ((2,), (3,)))
    t = concat_tabloids(t1, t2)
    assert t.shape == ((2,), (1,)) and t.rows == ((1, 2), (3,))


def test_basis_index_round_trip():
    basis = TabloidBasis(((2,), (1, 1)))
    assert basis.size == multinomial([2, 1, 1])
    for i in range(basis.size):
        assert basis.index(basis.tabloid(i)) == i
