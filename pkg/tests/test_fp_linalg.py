import numpy as np
import pytest

from signed_kostka import fp_linalg as fl


def rand(rng, shape, p=3):
    return rng.integers(0, p, size=shape)


def test_mulmod_matches_integer_product():
    rng = np.random.default_rng(0)
    a, b = rand(rng, (7, 5), 7), rand(rng, (5, 4), 7)
    assert np.array_equal(fl.mulmod(a, b, 7), (a @ b) % 7)


def test_rank_and_nullspace():
    m = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    # rows 1 and 2 are dependent mod 3
    assert fl.rank(m, 3) == 2
    ns = fl.nullspace(m, 3)
    assert ns.shape == (3, 1)
    assert not fl.mulmod(m, ns, 3).any()


def test_nilpotent_example():
    n = np.array([[0, 1], [0, 0]])
    assert fl.rank(n, 3) == 1
    assert fl.min_poly(n, 3) == [1, 0, 0]


def test_solve_and_inverse():
    rng = np.random.default_rng(1)
    for _ in range(20):
        a = rand(rng, (6, 6), 5)
        if fl.rank(a, 5) < 6:
            continue
        inv = fl.inverse(a, 5)
        assert np.array_equal(fl.mulmod(a, inv, 5), np.eye(6, dtype=np.int64))
        b = rand(rng, 6, 5)
        x = fl.solve(a, b, 5)
        assert np.array_equal(fl.mulmod(a, x[:, None], 5)[:, 0], b)
    with pytest.raises(ValueError):
        fl.inverse(np.zeros((2, 2), dtype=np.int64), 3)
    assert fl.solve(np.array([[1, 0], [0, 0]]), np.array([0, 1]), 3) is None


def test_factor_through():
    rng = np.random.default_rng(2)
    m = fl.mulmod(rand(rng, (6, 3)), rand(rng, (3, 6)), 3)
    b, c = fl.factor_through(m, 3)
    assert b.shape[1] == fl.rank(m, 3)
    assert np.array_equal(fl.mulmod(b, c, 3), m)


def test_min_poly_and_factor():
    # diag(1, 2) over F_3: minimal polynomial (x-1)(x-2) = x^2 + 1
    m = np.diag([1, 2])
    f = fl.min_poly(m, 3)
    assert f == [1, 0, 2]
    facs = fl.factor(f, 3)
    assert sorted(g for g, _ in facs) == [[1, 1], [1, 2]]
    q = fl.crt_idempotent_polys(f, 3)
    one = np.eye(2, dtype=np.int64)
    es = [fl.poly_eval_matrix(g, m, one, 3) for g in q]
    assert np.array_equal(sum(es) % 3, one)
    for e in es:
        assert np.array_equal(fl.mulmod(e, e, 3), e)


def test_coprime_split():
    m = np.diag([1, 1, 2])
    k1, k2 = fl.coprime_split(m, [1, 2], [1, 1], 3)
    assert (k1.shape[1], k2.shape[1]) == (2, 1)
    with pytest.raises(ValueError):
        fl.coprime_split(m, [1, 2], [1, 2], 3)


def test_monomial_matrix():
    a = fl.MonomialMatrix(np.array([1, 2, 0]), np.array([1, 2, 1]), 3)
    b = fl.MonomialMatrix(np.array([2, 0, 1]), np.array([2, 1, 1]), 3)
    assert np.array_equal(a.compose(b).to_dense(), fl.mulmod(a.to_dense(), b.to_dense(), 3))
    v = np.array([1, 2, 0])
    assert np.array_equal(a.apply(v), fl.mulmod(a.to_dense(), v[:, None], 3)[:, 0])
