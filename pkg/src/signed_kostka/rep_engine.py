"""Matrix representations over F_p, their Hom spaces and Krull-Schmidt decompositions.

Three kinds of modules appear:

* :class:`SignedYoungRep` -- M(alpha|beta) on its tabloid basis, with monomial
  generators and the data needed for Frobenius reciprocity;
* :class:`V2Rep` -- the hyperoctahedral analogue V_2(gamma|delta);
* :class:`DenseRep` -- anything else (restrictions to summands, F(U|V)).

A :class:`Summand` is an idempotent ``e`` of a parent module together with a
rank factorisation ``e = B @ C``.  ``e is None`` stands for the identity, so
large ambient modules never need a dense identity matrix.

Indecomposability is certified exactly: the corner algebra ``A = eEnd(M)e`` is
local with residue field F_p iff every basis element ``a_i`` is ``c_i e`` plus a
nilpotent and the span of the ``a_i - c_i e`` generates a nilpotent ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import fp_linalg as fl
from .combinatorics import RhoShape, comp, rho_shapes
from .sylow import (
    GroupSpec,
    PSubgroup,
    SignedPerm,
    adjacent_transposition,
    enumerate_group,
    hyperoctahedral,
    sylow_generators,
    sylow_of_symmetric,
    symmetric,
    word_in_adjacent,
)
from .tabloids import TabloidBasis

DEFAULT_DIM_CAP = 1500
DEFAULT_BUDGET = 40
END_COST_CAP = 8e6  # entries of the End basis held densely
DEFAULT_ENUM_CAP = 3**6
_CHUNK = 1 << 21


class Unresolved(RuntimeError):
    """A computation could not be certified within its budget."""


def _parity(perm: Sequence[int]) -> int:
    seen, sign = set(), 1
    for i in range(1, len(perm) + 1):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- representations ---------------------------------------------------------------


class Rep:
    group: GroupSpec
    p: int
    label: str

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def apply_gen(self, i: int, v: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def dense_gens(self) -> list[np.ndarray]:
        eye = np.eye(self.dim, dtype=np.int64)
        return [self.apply_gen(i, eye) for i in range(self.num_gens)]

    @property
    def num_gens(self) -> int:
        return len(self.group.generators())

    def apply(self, g, v: np.ndarray) -> np.ndarray:
        """``rho(g) @ v`` for an arbitrary group element."""
        n = self.group.degree
        if self.group.kind == "symmetric":
            for i in reversed(word_in_adjacent(g)):
                v = self.apply_gen(i - 1, v)
            return v
        flip = self.num_gens - 1
        # g = (signs; id)(1; sigma)
        for i in reversed(word_in_adjacent(g.perm)):
            v = self.apply_gen(i - 1, v)
        for pos, s in enumerate(g.signs, start=1):
            if s == -1:
                tau = list(range(1, n + 1))
                tau[0], tau[pos - 1] = pos, 1
                word = word_in_adjacent(tau)
                for i in word:  # tau^-1 = tau
                    v = self.apply_gen(i - 1, v)
                v = self.apply_gen(flip, v)
                for i in reversed(word):
                    v = self.apply_gen(i - 1, v)
        return v

    def check_relations(self):
        gens = self.dense_gens()
        p, n = self.p, self.dim
        eye = np.eye(n, dtype=np.int64)
        m = self.group.degree - 1
        for i, a in enumerate(gens):
            assert np.array_equal(fl.mulmod(a, a, p), eye), "generator of order != 2"
        for i in range(m):
            for j in range(i + 1, m):
                a, b = gens[i], gens[j]
                ab = fl.mulmod(a, b, p)
                if j == i + 1:
                    lhs = fl.mulmod(ab, a, p)
                    rhs = fl.mulmod(fl.mulmod(b, a, p), b, p)
                    assert np.array_equal(lhs, rhs), "braid relation fails"
                else:
                    assert np.array_equal(ab, fl.mulmod(b, a, p)), "commutation fails"
        if self.group.kind == "hyperoctahedral" and m >= 1:
            eps = gens[-1]
            # eps_1 commutes with s_2..s_{m}; (s_1 eps_1)^4 = 1
            for i in range(1, m):
                assert np.array_equal(fl.mulmod(eps, gens[i], p), fl.mulmod(gens[i], eps, p))
            x = fl.mulmod(gens[0], eps, p)
            x2 = fl.mulmod(x, x, p)
            assert np.array_equal(fl.mulmod(x2, x2, p), eye)


class DenseRep(Rep):
    def __init__(self, group: GroupSpec, p: int, gens: list[np.ndarray], label: str = ""):
        self.group, self.p, self.label = group, p, label
        self.gens = [fl.reduce(g, p) for g in gens]
        self._dim = self.gens[0].shape[0] if self.gens else None

    @classmethod
    def trivial_of_dim(cls, group, p, dim, label=""):
        eye = np.eye(dim, dtype=np.int64)
        return cls(group, p, [eye] * len(group.generators()), label).with_dim(dim)

    def with_dim(self, d):
        self._dim = d
        return self

    @property
    def dim(self) -> int:
        return self._dim if self._dim is not None else 1

    def apply_gen(self, i, v):
        return fl.mulmod(self.gens[i], v, self.p)

    def dense_gens(self):
        return list(self.gens)


class MonomialRep(Rep):
    """A module on a tabloid basis with monomial generators."""

    basis: TabloidBasis

    @cached_property
    def monomial_gens(self) -> list[fl.MonomialMatrix]:
        raise NotImplementedError

    @property
    def dim(self) -> int:
        return self.basis.size

    def apply_gen(self, i, v):
        return self.monomial_gens[i].apply(fl.reduce(v, self.p))

    def dense_gens(self):
        return [m.to_dense() for m in self.monomial_gens]


class SignedYoungRep(MonomialRep):
    """M(alpha|beta) over S_n on the signed tabloid basis."""

    def __init__(self, shape, p: int, cap: int | None = None):
        alpha, beta = shape
        self.shape = (tuple(alpha), tuple(beta))
        self.p = p
        self.basis = TabloidBasis(self.shape, **({"cap": cap} if cap else {}))
        self.group = symmetric(self.basis.n)
        self.label = f"M{_fmt(self.shape)}"

    @cached_property
    def monomial_gens(self):
        out = []
        for g in self.group.generators():
            idx, s = self.basis.action(g)
            out.append(fl.MonomialMatrix(idx, s % self.p, self.p))
        return out

    def action(self, g):
        return self.basis.action(g)

    def apply(self, g, v):
        idx, s = self.basis.action(g)
        out = np.zeros_like(v)
        out[idx] = (s[:, None] * v) if v.ndim == 2 else s * v
        return out % self.p

    @cached_property
    def inducing(self) -> tuple[list[tuple], list[int]]:
        """Generators of S_alpha x S_beta and the inducing character on them."""
        gens, chars, k = [], [], 1
        na = len(self.shape[0])
        for r, length in enumerate(list(self.shape[0]) + list(self.shape[1])):
            for j in range(k, k + length - 1):
                gens.append(adjacent_transposition(j, self.basis.n))
                chars.append(1 if r < na else -1)
            k += length
        return gens, chars

    @property
    def coset_perms(self) -> np.ndarray:
        """Row t maps the standard tabloid onto tabloid t (with sign +1)."""
        return self.basis.entries


class V2Rep(MonomialRep):
    """V_2(gamma|delta) over C2 wr S_m on the (gamma|delta)-tabloid basis."""

    def __init__(self, shape, p: int):
        self.shape = (tuple(shape[0]), tuple(shape[1]))
        self.p = p
        self.basis = TabloidBasis(self.shape)
        self.group = hyperoctahedral(self.basis.n)
        self.label = f"V2{_fmt(self.shape)}"

    @cached_property
    def monomial_gens(self):
        out = []
        m = self.basis.n
        for i in range(1, m):
            idx, s = self.basis.action(adjacent_transposition(i, m))
            out.append(fl.MonomialMatrix(idx, s % self.p, self.p))
        if m:
            na = sum(self.shape[0])
            pos_of_one = np.argmax(self.basis.entries == 1, axis=1)
            scal = np.where(pos_of_one >= na, -1, 1) % self.p
            out.append(fl.MonomialMatrix(np.arange(self.basis.size), scal, self.p))
        return out


def _fmt(shape) -> str:
    from .combinatorics import fmt_pair

    return fmt_pair(shape)


def signed_young_rep(shape, p: int, cap: int = DEFAULT_DIM_CAP * 300) -> SignedYoungRep:
    return SignedYoungRep((comp(shape[0]), comp(shape[1])), p, cap=cap)


def v2_rep(shape, p: int) -> V2Rep:
    return V2Rep((comp(shape[0]), comp(shape[1])), p)


def restrict(S: "Summand") -> DenseRep:
    """The summand as a module in its own right."""
    R = S.parent
    if S.e is None:
        gens = R.dense_gens()
    else:
        gens = [fl.mulmod(S.C, R.apply_gen(i, S.B), R.p) for i in range(R.num_gens)]
    out = DenseRep(R.group, R.p, gens, label=S.label)
    return out.with_dim(S.dim)


def bifunctor_F(U: Rep, V: Rep, p: int) -> DenseRep:
    """Induce Inf U (x) (Inf V (x) sgn-hat^{m2}) from C2 wr (S_m1 x S_m2) to C2 wr S_m."""
    m1, m2 = U.group.degree, V.group.degree
    m = m1 + m2
    G = hyperoctahedral(m)
    subsets = list(itertools.combinations(range(1, m + 1), m1))
    index = {A: i for i, A in enumerate(subsets)}
    du, dv = U.dim, V.dim
    block = du * dv
    dim = len(subsets) * block

    def coset(A):
        rest = [x for x in range(1, m + 1) if x not in A]
        return SignedPerm((1,) * m, tuple(list(A) + rest))

    reps = [coset(A) for A in subsets]
    gens = []
    eye_u = np.eye(du, dtype=np.int64)
    eye_v = np.eye(dv, dtype=np.int64)
    for g in G.generators():
        mat = np.zeros((dim, dim), dtype=np.int64)
        for A, c in zip(subsets, reps):
            image = tuple(sorted(g.perm[a - 1] for a in A))
            c2 = reps[index[image]]
            h = c2.inverse() * g * c
            assert set(h.perm[:m1]) == set(range(1, m1 + 1))
            pi1 = h.perm[:m1]
            pi2 = tuple(x - m1 for x in h.perm[m1:])
            scalar = _parity(pi2) * int(np.prod(h.signs[m1:])) if m2 else 1
            mu = U.apply(pi1, eye_u) if m1 else eye_u
            mv = V.apply(pi2, eye_v) if m2 else eye_v
            blk = (np.kron(mu, mv) * scalar) % p
            i, j = index[image], index[A]
            mat[i * block : (i + 1) * block, j * block : (j + 1) * block] = blk
        gens.append(mat)
    out = DenseRep(G, p, gens, label=f"F({U.label}|{V.label})")
    return out.with_dim(dim)


# -- eigenspaces and Hom spaces ------------------------------------------------------


def char_eigenspace(R: Rep, gens: Sequence, chars: Sequence[int]) -> np.ndarray:
    """Columns spanning ``{v : g v = chi(g) v}`` for the listed generators."""
    p = R.p
    if not gens:
        return np.eye(R.dim, dtype=np.int64)
    if isinstance(R, SignedYoungRep):
        return _signed_orbit_eigenspace(R, gens, chars)
    eye = np.eye(R.dim, dtype=np.int64)
    blocks = [(R.apply(g, eye) - c * eye) % p for g, c in zip(gens, chars)]
    return fl.nullspace(np.concatenate(blocks, axis=0), p)


def _signed_orbit_eigenspace(R: SignedYoungRep, gens, chars) -> np.ndarray:
    p, N = R.p, R.dim
    acts = [R.action(g) for g in gens]
    idxs = np.stack([a[0] for a in acts]).T.tolist()
    sgns = np.stack([a[1] * c for a, c in zip(acts, chars)]).T.tolist()
    coeff = [0] * N
    cols = []
    for start in range(N):
        if coeff[start]:
            continue
        coeff[start] = 1
        stack, members, ok = [start], [start], True
        while stack:
            t = stack.pop()
            ct = coeff[t]
            for t2, s in zip(idxs[t], sgns[t]):
                want = ct * s
                if coeff[t2] == 0:
                    coeff[t2] = want
                    stack.append(t2)
                    members.append(t2)
                elif coeff[t2] != want:
                    ok = False
        if ok:
            cols.append((members, [coeff[t] for t in members]))
    out = np.zeros((N, len(cols)), dtype=np.int64)
    for k, (members, vals) in enumerate(cols):
        out[members, k] = np.asarray(vals) % p
    return out


def frobenius_homs(M: SignedYoungRep, V: Rep, vs: np.ndarray | None = None) -> np.ndarray:
    """Basis of Hom(M, V), shape ``(h, dim V, dim M)``.

    ``v`` in the eigenspace of S_alpha x S_beta on V (with the inducing
    character) gives the map sending tabloid ``t = g_t {T}`` to ``g_t v``.
    """
    p = M.p
    if vs is None:
        gens, chars = M.inducing
        vs = char_eigenspace(V, gens, chars)
    h, N1, N2 = vs.shape[1], M.dim, V.dim
    out = np.zeros((h, N2, N1), dtype=np.int64)
    if h == 0:
        return out
    cosets = M.coset_perms
    if isinstance(V, SignedYoungRep) and V.basis.n:
        step = max(1, _CHUNK // max(N2, 1))
        vsT = vs.T
        for a in range(0, N1, step):
            b = min(N1, a + step)
            g = cosets[a:b]
            filled = np.take_along_axis(
                np.repeat(g, N2, axis=0),
                np.tile(V.basis.entries - 1, (b - a, 1)),
                axis=1,
            )
            idx, sgn = V.basis.act_filled(filled)
            idx = idx.reshape(b - a, N2)
            sgn = sgn.reshape(b - a, N2)
            cols = np.broadcast_to(np.arange(a, b)[:, None], idx.shape)
            for k in range(h):
                out[k, idx, cols] = (sgn * vsT[k][None, :]) % p
    else:
        for t in range(N1):
            col = V.apply(tuple(int(x) for x in cosets[t]), vs)
            out[:, :, t] = col.T
    return out


def end_dimension(M: SignedYoungRep) -> int:
    gens, chars = M.inducing
    return char_eigenspace(M, gens, chars).shape[1]


def krylov_min_poly(X: np.ndarray, u: np.ndarray, p: int) -> list[int]:
    """Monic generator of ``{f : f(X) u = 0}``."""
    n = X.shape[0]
    rows = np.zeros((0, n), dtype=np.int64)  # fully reduced Krylov rows
    trans = np.zeros((0, 0), dtype=np.int64)  # rows = trans @ [u, Xu, ...]
    pivots: list[int] = []
    v = fl.reduce(u, p)
    for k in range(n + 1):
        c = v[pivots] if pivots else np.zeros(0, dtype=np.int64)
        r = (v - c @ rows) % p if pivots else v.copy()
        tk = np.zeros(k + 1, dtype=np.int64)
        tk[k] = 1
        if pivots:
            tk[:k] = (-(c @ trans)) % p
        if not r.any():
            # tk @ [u, Xu, ..., X^k u] = 0 and tk[k] = 1
            return [int(x) for x in tk[::-1]]
        col = int(np.flatnonzero(r)[0])
        inv = fl.inv_mod(r[col], p)
        r = (r * inv) % p
        tk = (tk * inv) % p
        if pivots:
            f = rows[:, col].copy()
            rows = (rows - np.outer(f, r)) % p
            trans = np.concatenate([trans, np.zeros((len(pivots), 1), dtype=np.int64)], axis=1)
            trans = (trans - np.outer(f, tk)) % p
        rows = np.concatenate([rows, r[None]], axis=0)
        trans = np.concatenate([trans if trans.size else np.zeros((0, k + 1), dtype=np.int64), tk[None]], axis=0)
        pivots.append(col)
        v = fl.mulmod(X, v[:, None], p)[:, 0]
    raise AssertionError("Krylov sequence did not terminate")


def split_witness(M: SignedYoungRep, seed: int = 0, tries: int = DEFAULT_BUDGET) -> bool:
    """True if some random endomorphism has a vector whose annihilator splits.

    A positive answer proves M decomposable (two generalised eigenspaces of an
    endomorphism are complementary submodules); a negative one proves nothing.
    """
    p = M.p
    rng = np.random.default_rng(seed)
    gens, chars = M.inducing
    vs = char_eigenspace(M, gens, chars)
    for _ in range(tries):
        v = fl.mulmod(vs, rng.integers(0, p, size=(vs.shape[1], 1)), p)
        X = frobenius_homs(M, M, v)[0]
        u = rng.integers(0, p, size=M.dim)
        f = krylov_min_poly(X, u, p)
        if len(fl.factor(f, p)) >= 2:
            return True
    return False


def direct_homs(U: Rep, V: Rep) -> np.ndarray:
    """Basis of Hom(U, V) by solving ``X rho_U(g) = rho_V(g) X``; shape ``(h, dim V, dim U)``."""
    p = U.p
    du, dv = U.dim, V.dim
    if dv * du > 6000:
        raise Unresolved(f"direct Hom solve too large ({dv}x{du})")
    gu, gv = U.dense_gens(), V.dense_gens()
    if not gu:
        basis = np.eye(dv * du, dtype=np.int64)
    else:
        eye_u, eye_v = np.eye(du, dtype=np.int64), np.eye(dv, dtype=np.int64)
        rows = [(np.kron(eye_v, a.T) - np.kron(b, eye_u)) % p for a, b in zip(gu, gv)]
        basis = fl.nullspace(np.concatenate(rows, axis=0), p)
    return basis.T.reshape(-1, dv, du)


# -- summands ------------------------------------------------------------------------


@dataclass(eq=False)
class Summand:
    parent: Rep
    e: np.ndarray | None
    B: np.ndarray | None
    C: np.ndarray | None
    status: str = "unknown"  # "certified", "unresolved" or "unknown"
    end_dim: int | None = None
    residue: tuple | None = None  # (rows, cols, weights) of a linear functional
    radical_nilpotent: bool | None = None
    label: str = ""

    @property
    def dim(self) -> int:
        return self.parent.dim if self.e is None else self.B.shape[1]

    @property
    def p(self) -> int:
        return self.parent.p

    @property
    def group(self) -> GroupSpec:
        return self.parent.group

    def idempotent(self) -> np.ndarray:
        if self.e is None:
            return np.eye(self.parent.dim, dtype=np.int64)
        return self.e


def whole(R: Rep) -> Summand:
    return Summand(R, None, None, None, label=R.label)


def _as_summand(X) -> Summand:
    return X if isinstance(X, Summand) else whole(X)


def hom_space(U, V) -> np.ndarray:
    """Spanning set of Hom(U, V) in parent coordinates, shape ``(h, dim V.parent, dim U.parent)``."""
    U, V = _as_summand(U), _as_summand(V)
    p = U.p
    if U.group != V.group:
        raise ValueError("modules over different groups")
    if isinstance(U.parent, SignedYoungRep):
        H = frobenius_homs(U.parent, V.parent)
    else:
        H = direct_homs(U.parent, V.parent)
    if U.e is not None:
        H = np.stack([fl.mulmod(h, U.e, p) for h in H]) if len(H) else H
    if V.e is not None:
        H = np.stack([fl.mulmod(V.e, h, p) for h in H]) if len(H) else H
    return H


def independent(H: np.ndarray, p: int) -> np.ndarray:
    if len(H) == 0:
        return H
    flat = H.reshape(len(H), -1)
    _, piv = fl.rref(flat.T, p)
    return H[piv]


def hom_dim(U, V) -> int:
    H = hom_space(U, V)
    if len(H) == 0:
        return 0
    return fl.rank(H.reshape(len(H), -1), _as_summand(U).p)


@dataclass
class EndAlgebra:
    basis: np.ndarray  # (d, n, n)
    p: int
    positions: np.ndarray  # flat positions determining coordinates
    coord_inv: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: np.ndarray) -> np.ndarray:
        return fl.mulmod(x.ravel()[self.positions][None, :], self.coord_inv, self.p)[0]

    @cached_property
    def structure_constants(self) -> np.ndarray:
        d = self.dim
        out = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                out[i, j] = self.coords(fl.mulmod(self.basis[i], self.basis[j], self.p))
        return out


def _algebra(basis: np.ndarray, p: int) -> EndAlgebra:
    flat = basis.reshape(len(basis), -1)
    _, piv = fl.rref(flat, p)
    sub = flat[:, piv]
    return EndAlgebra(basis, p, np.asarray(piv, dtype=np.int64), fl.inverse(sub, p))


def end_algebra(U) -> EndAlgebra:
    S = _as_summand(U)
    basis = independent(hom_space(S, S), S.p)
    return _algebra(basis, S.p)


# -- decomposition ----------------------------------------------------------------------


def _corner(E: np.ndarray, e: np.ndarray, p: int) -> np.ndarray:
    prods = np.stack([fl.mulmod(fl.mulmod(e, b, p), e, p) for b in E])
    return independent(prods, p)


def _minpoly_in(alg: EndAlgebra, x: np.ndarray, one: np.ndarray) -> list[int]:
    p = alg.p

    def powers():
        cur = one
        while True:
            yield alg.coords(cur)
            cur = fl.mulmod(cur, x, p)

    return fl.min_poly_from_powers(powers(), p, alg.dim + 1)


def _split(alg, x, one, f) -> list[np.ndarray] | None:
    if len(fl.factor(f, alg.p)) < 2:
        return None
    return [fl.poly_eval_matrix(q, x, one, alg.p) for q in fl.crt_idempotent_polys(f, alg.p)]


def _nilpotent_span(N: np.ndarray, p: int, bound: int) -> bool:
    """Does the span of ``N`` generate a nilpotent algebra?  (N^{bound+1} = 0 test.)"""
    if len(N) == 0:
        return True
    gens = independent(N, p)
    cur = gens
    for _ in range(bound + 1):
        prods = np.stack([fl.mulmod(a, b, p) for a in cur for b in gens])
        prods = prods[[bool(x.any()) for x in prods]]
        if len(prods) == 0:
            return True
        cur = independent(prods, p)
    return False


def _certify_local(alg: EndAlgebra, one: np.ndarray):
    """Return ("local", residue weights), ("split", idempotents) or ("nonlocal", None)."""
    p = alg.p
    d = alg.dim
    if d == 1:
        return "local", None
    scalars, nil = [], []
    for a in alg.basis:
        f = _minpoly_in(alg, a, one)
        parts = _split(alg, a, one, f)
        if parts is not None:
            return "split", parts
        (g, _), = fl.factor(f, p)
        if len(g) != 2:
            return "nonlocal", None
        c = (-g[1]) % p
        scalars.append(c)
        nil.append((a - c * one) % p)
    if _nilpotent_span(np.stack(nil), p, d):
        return "local", None
    return "nonlocal", None


def _residue_functional(alg: EndAlgebra, one: np.ndarray, n: int) -> tuple:
    """Weights ``w`` on flat positions with ``x = (w . x) one + radical``."""
    p = alg.p
    c1 = alg.coords(one)
    # each basis element b_i is res_i * one + nilpotent; residue(x) = sum_i c_i(x) res_i
    res_b = []
    for b in alg.basis:
        f = _minpoly_in(alg, b, one)
        (g, _), = fl.factor(f, p)
        res_b.append((-g[1]) % p)
    res_b = np.asarray(res_b, dtype=np.int64)
    assert int((c1 @ res_b) % p) == 1
    w = fl.mulmod(alg.coord_inv, res_b[:, None], p)[:, 0]
    rows, cols = np.divmod(alg.positions, n)
    return rows, cols, w


def decompose(
    R,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_DIM_CAP,
) -> list[Summand]:
    """Krull-Schmidt decomposition via Fitting splits of random endomorphisms."""
    S0 = _as_summand(R)
    M, p = S0.parent, S0.p
    n = M.dim
    if S0.dim > cap:
        raise Unresolved(f"dimension {S0.dim} exceeds the decomposition cap {cap}")
    rng = np.random.default_rng(seed)
    E = independent(hom_space(whole(M), whole(M)), p)
    if len(E) * n * n > END_COST_CAP:
        raise Unresolved(f"endomorphism algebra too large ({len(E)} x {n}^2)")
    stack = [S0.idempotent()]
    done: list[tuple[np.ndarray, str, EndAlgebra]] = []
    while stack:
        e = stack.pop()
        A = _corner(E, e, p)
        alg = _algebra(A, p)
        status, parts = "unresolved", None
        certified_once = False
        for attempt in range(budget):
            if alg.dim == 1:
                status = "local"
                break
            coeffs = rng.integers(0, p, size=alg.dim)
            x = np.tensordot(coeffs, A, axes=1) % p
            f = _minpoly_in(alg, x, e)
            parts = _split(alg, x, e, f)
            if parts is not None:
                break
            if not certified_once:
                certified_once = True
                status, parts = _certify_local(alg, e)
                if status != "nonlocal":
                    break
                status, parts = "unresolved", None
        if parts is not None:
            stack.extend(q for q in parts if q.any())
            continue
        done.append((e, status, alg))
    out = []
    for e, status, alg in sorted(done, key=lambda t: -int(fl.rank(t[0], p))):
        B, C = fl.factor_through(e, p)
        S = Summand(M, e, B, C, status="certified" if status == "local" else "unresolved", label=M.label)
        S.end_dim = alg.dim
        if status == "local":
            S.residue = _residue_functional(alg, e, n)
        out.append(S)
    _check_decomposition(M, out, S0)
    return out


def _check_decomposition(M: Rep, parts: list[Summand], S0: Summand):
    p = M.p
    total = sum(S.dim for S in parts)
    assert total == S0.dim, "summand dimensions do not add up"
    esum = sum(S.e for S in parts) % p
    assert np.array_equal(esum, S0.idempotent()), "idempotents do not sum to the identity"
    for S in parts:
        assert np.array_equal(fl.mulmod(S.e, S.e, p), S.e)
        for i in range(M.num_gens):
            ge = M.apply_gen(i, S.e)
            eg = fl.mulmod(S.e, M.apply_gen(i, np.eye(M.dim, dtype=np.int64)), p)
            assert np.array_equal(ge, eg), "idempotent is not an endomorphism"


def certify(U) -> Summand:
    """Certify (or refute) indecomposability of a module or summand in place."""
    S = _as_summand(U)
    if S.status == "certified":
        return S
    parts = decompose(S)
    if len(parts) != 1:
        raise ValueError(f"{S.label} is decomposable ({len(parts)} summands)")
    S2 = parts[0]
    if S.e is not None:
        S.e, S.B, S.C = S2.e, S2.B, S2.C
    S.status, S.residue, S.end_dim = S2.status, S2.residue, S2.end_dim
    if S.status != "certified":
        raise Unresolved(f"could not certify {S.label}")
    return S


def is_indecomposable(U, seed: int = 0, budget: int = DEFAULT_BUDGET) -> bool:
    parts = decompose(U, seed=seed, budget=budget)
    if len(parts) > 1:
        return False
    if parts[0].status != "certified":
        raise Unresolved("indecomposability not certified")
    return True


# -- comparing summands -------------------------------------------------------------------


def _residues(V: Summand, Psi: np.ndarray, Phi: np.ndarray) -> np.ndarray:
    """Matrix ``B[i, j] = residue(Psi_j @ Phi_i)`` of the composition pairing."""
    rows, cols, w = V.residue
    p = V.p
    if len(Psi) == 0 or len(Phi) == 0:
        return np.zeros((len(Phi), len(Psi)), dtype=np.int64)
    out = np.zeros((len(Phi), len(Psi)), dtype=np.int64)
    for a, b, wt in zip(rows, cols, w):
        if wt == 0:
            continue
        left = Psi[:, a, :]  # (j, n_M)
        right = Phi[:, :, b]  # (i, n_M)
        out = (out + wt * fl.mulmod(right, left.T, p)) % p
    return out


def _residue_ready(V: Summand) -> Summand:
    V = _as_summand(V)
    if V.residue is None:
        certify(V)
    if V.residue is None:  # one-dimensional End: residue is the coefficient of e
        e = V.idempotent()
        alg = _algebra(e[None], V.p)
        V.residue = _residue_functional(alg, e, V.parent.dim)
    return V


def multiplicity(M, V) -> int:
    """``[M : V]`` for an indecomposable ``V``: rank of the composition pairing

    Hom(V, M) x Hom(M, V) -> End(V) / rad End(V) = F_p.
    """
    V = _residue_ready(V)
    M = _as_summand(M)
    if (
        V.e is None
        and M.e is None
        and isinstance(V.parent, SignedYoungRep)
        and isinstance(M.parent, SignedYoungRep)
    ):
        return fl.rank(_light_pairing(M.parent, V), V.p)
    Phi = hom_space(V, M)
    Psi = hom_space(M, V)
    return fl.rank(_residues(V, Psi, Phi), V.p)


def _light_pairing(M: SignedYoungRep, V: Summand) -> np.ndarray:
    """The pairing matrix without materialising Hom spaces (``V`` a whole tabloid module)."""
    Vm = V.parent
    p = Vm.p
    rows, cols, w = V.residue
    gens_v, chars_v = Vm.inducing
    U = char_eigenspace(M, gens_v, chars_v)  # Hom(V, M)
    gens_m, chars_m = M.inducing
    W = char_eigenspace(Vm, gens_m, chars_m)  # Hom(M, V)
    out = np.zeros((U.shape[1], W.shape[1]), dtype=np.int64)
    if out.size == 0:
        return out
    inv = np.argsort(M.coset_perms, axis=1) + 1 if M.basis.n else M.coset_perms
    for a, b, wt in zip(rows, cols, w):
        if wt == 0:
            continue
        phi_b = M.apply(tuple(int(x) for x in Vm.coset_perms[b]), U)  # (N_M, h1)
        if Vm.basis.n:
            idx, sgn = Vm.basis.act_on_one(inv, int(a))
        else:
            idx, sgn = np.zeros(M.dim, dtype=np.int64), np.ones(M.dim, dtype=np.int64)
        psi_a = (sgn[:, None] * W[idx, :]) % p  # (N_M, h2)
        out = (out + wt * fl.mulmod(phi_b.T, psi_a, p)) % p
    return out


def is_isomorphic(U, V, seed: int = 0, retries: int = 20) -> bool:
    U, V = _as_summand(U), _as_summand(V)
    if U.group != V.group or U.dim != V.dim:
        return False
    try:
        _residue_ready(U)
        local = True
    except (ValueError, Unresolved):
        local = False
    if local:
        try:
            _residue_ready(V)
        except ValueError:
            return False
        except Unresolved:
            pass
        return multiplicity(V, U) > 0
    # fallback: random intertwiners
    p = U.p
    H = hom_space(U, V)
    if len(H) == 0:
        return False
    rng = np.random.default_rng(seed)
    Cv = V.C if V.e is not None else np.eye(V.parent.dim, dtype=np.int64)
    Bu = U.B if U.e is not None else np.eye(U.parent.dim, dtype=np.int64)
    for _ in range(retries):
        x = np.tensordot(rng.integers(0, p, size=len(H)), H, axes=1) % p
        if fl.rank(fl.mulmod(fl.mulmod(Cv, x, p), Bu, p), p) == U.dim:
            return True
    H = independent(H, p)
    if p ** len(H) <= 3**12:
        for coeffs in itertools.product(range(p), repeat=len(H)):
            x = np.tensordot(np.asarray(coeffs), H, axes=1) % p
            if fl.rank(fl.mulmod(fl.mulmod(Cv, x, p), Bu, p), p) == U.dim:
                return True
        return False
    raise Unresolved("isomorphism test inconclusive")


# -- p-local invariants ---------------------------------------------------------------


def _restricted_action(S: Summand, g) -> np.ndarray:
    R = S.parent
    if S.e is None:
        return R.apply(g, np.eye(R.dim, dtype=np.int64))
    return fl.mulmod(S.C, R.apply(g, S.B), R.p)


def is_projective(U, cap: int = DEFAULT_ENUM_CAP) -> bool:
    S = _as_summand(U)
    G = S.group
    P = sylow_of_symmetric(G.degree, S.p)
    order = P.order
    if S.dim % order:
        return False
    elems = enumerate_group(P, cap=cap)
    total = np.zeros((S.dim, S.dim), dtype=np.int64)
    for g in elems:
        total = (total + _restricted_action(S, G.embed(g))) % S.p
    return fl.rank(total, S.p) == S.dim // order


def brauer_quotient_dim(U, P: PSubgroup) -> int:
    S = _as_summand(U)
    M = S.parent
    if not isinstance(M, SignedYoungRep):
        raise TypeError("Brauer quotients are computed on tabloid modules only")
    fixed = M.basis.fixed_indices(P.generators)
    if S.e is None or len(fixed) == 0:
        return len(fixed)
    return fl.rank(S.e[np.ix_(fixed, fixed)], S.p)


def vertex_shape_of(U) -> RhoShape:
    S = _as_summand(U)
    n, p = S.group.degree, S.p
    for rho in rho_shapes(n, p):
        if brauer_quotient_dim(S, sylow_generators(rho)) > 0:
            return rho
    raise AssertionError("no Sylow shape has a nonzero Brauer quotient")
