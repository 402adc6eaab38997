import numpy as np
import pytest

from signed_kostka import fp_linalg as fl
from signed_kostka import rep_engine as re
from signed_kostka.combinatorics import RhoShape
from signed_kostka.sylow import symmetric, sylow_generators, word_in_adjacent
from signed_kostka.tabloids import perm_from_cycles
from signed_kostka.sylow import PSubgroup

P = 3


def sy(a, b=()):
    return re.signed_young_rep((a, b), P)


@pytest.mark.parametrize("shape", [((2, 1), ()), ((1,), (2,)), ((), (2, 1)), ((2,), (1, 1))])
def test_relations_hold(shape):
    sy(*shape).check_relations()
    re.v2_rep(shape, P).check_relations()


def test_bifunctor_relations_and_dim():
    U = re.restrict(re.whole(sy((2,))))
    V = re.restrict(re.whole(sy((1,))))
    F = re.bifunctor_F(U, V, P)
    assert F.dim == 3
    F.check_relations()


def test_apply_matches_generators():
    M = sy((2, 1), (1,))
    eye = np.eye(M.dim, dtype=np.int64)
    for g in [perm_from_cycles([(1, 3, 4)], 4), perm_from_cycles([(1, 2), (3, 4)], 4)]:
        w = eye
        for i in reversed(word_in_adjacent(g)):
            w = M.apply_gen(i - 1, w)
        assert np.array_equal(M.apply(g, eye), w)
    h = perm_from_cycles([(2, 4)], 4)
    gh = tuple(g[x - 1] for x in h)
    assert np.array_equal(M.apply(gh, eye), M.apply(g, M.apply(h, eye)))


def test_decompose_small_examples():
    parts = re.decompose(sy((2,), (2,)))
    assert [S.dim for S in parts] == [3, 3]
    assert all(S.status == "certified" for S in parts)
    (S,) = re.decompose(sy((2, 1)))
    assert S.end_dim == 2


def test_decompose_example_module():
    parts = re.decompose(sy((2, 1), (6,)))
    assert sorted(S.dim for S in parts) == [27, 36, 189]
    parts = re.decompose(sy((), (9, 3)))
    assert sorted(S.dim for S in parts) == [1, 54, 165]


def test_cap_raises_unresolved():
    with pytest.raises(re.Unresolved):
        re.decompose(sy((1,) * 7))
    with pytest.raises(re.Unresolved):
        re.direct_homs(sy((1,) * 5), sy((1,) * 5))


def test_hom_dims():
    # Mackey: dim Hom(M^(2,1), M^(2,1)) = number of double cosets = 2
    assert re.hom_dim(sy((2, 1)), sy((2, 1))) == 2
    assert re.hom_dim(sy((3,)), sy((), (3,))) == 0
    assert re.end_dimension(sy((1, 1, 1))) == 6


def test_isomorphism():
    assert re.is_isomorphic(re.whole(sy((2, 1))), re.whole(sy((2,), (1,))))
    assert not re.is_isomorphic(re.whole(sy((2,), (1,))), re.whole(sy((1,), (2,))))
    assert not re.is_isomorphic(re.whole(sy((3,))), re.whole(sy((), (3,))))


def test_multiplicity_against_decomposition():
    M = sy((1, 1, 1), (1,))
    parts = re.decompose(M)
    for V in parts:
        count = sum(1 for S in parts if re.is_isomorphic(S, V))
        assert re.multiplicity(M, V) == count


def test_projectivity():
    assert re.is_projective(re.whole(sy((1, 1, 1))))
    assert not re.is_projective(re.whole(sy((3,))))
    assert not re.is_projective(re.whole(sy((), (3,))))
    assert re.is_projective(re.whole(sy((2,))))


def test_brauer_quotient_example():
    M = re.whole(sy((2, 1), (6,)))
    Q2 = sylow_generators(RhoShape((3, 2), P))
    q1 = (perm_from_cycles([(1, 2, 3)], 9),) + Q2.generators
    Q1 = PSubgroup(9, q1)
    assert re.brauer_quotient_dim(M, Q2) == 3
    assert re.brauer_quotient_dim(M, Q1) == 0


def test_vertices():
    assert re.vertex_shape_of(re.whole(sy((), (4,)))) == RhoShape((1, 1), P)
    assert re.vertex_shape_of(re.whole(sy((2, 1)))) == RhoShape((3,), P)
    assert re.vertex_shape_of(re.whole(sy((3,)))) == RhoShape((0, 1), P)


def test_split_witness():
    assert re.split_witness(sy((2,), (2,)))
    assert not re.split_witness(sy((2, 1)), tries=5)


def test_krylov_min_poly_divides_min_poly():
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = rng.integers(0, P, size=(7, 7))
        u = rng.integers(0, P, size=7)
        f = re.krylov_min_poly(x, u, P)
        assert not fl.mulmod(fl.poly_eval_matrix(f, x, np.eye(7, dtype=np.int64), P), u[:, None], P).any()
        assert len(f) <= len(fl.min_poly(x, P))


def test_trivial_group_module():
    R = re.DenseRep(symmetric(0), P, []).with_dim(1)
    assert R.dim == 1
