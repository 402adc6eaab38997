"""Dense linear algebra over the prime field F_p.

Matrices are numpy ``int64`` arrays holding residues in ``[0, p)``.  Products
go through float64 BLAS whenever the accumulated value is exactly
representable, which is always the case at the sizes used here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import ZZ
from sympy.polys import galoistools as gt

_EXACT = 2**52


def reduce(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without overflow."""
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 < _EXACT:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.mod(out, p).astype(np.int64)
    return np.mod(np.asarray(a, dtype=object) @ np.asarray(b, dtype=object), p).astype(np.int64)


def inv_mod(x: int, p: int) -> int:
    x = int(x) % p
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(x, p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns (first nonzero pivoting)."""
    a = reduce(m, p).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv_mod(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    if m.shape[0] > m.shape[1]:
        m = m.T
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning ``{x : m x = 0}``."""
    m = np.asarray(m)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = rref(m, p)
    free = [c for c in range(cols) if c not in set(piv)]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, c in enumerate(piv):
            out[c, j] = (-r[i, f]) % p
    return out


def solve(m: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of ``m x = b`` or ``None`` if inconsistent."""
    m = reduce(m, p)
    b = reduce(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    aug = np.concatenate([m, b], axis=1)
    r, piv = rref(aug, p)
    n = m.shape[1]
    if any(c >= n for c in piv):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x[:, 0] if vec else x


def image_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Columns of ``m`` forming a basis of its column space."""
    _, piv = rref(m, p)
    return reduce(m, p)[:, piv]


def row_basis(m: np.ndarray, p: int) -> np.ndarray:
    r, piv = rref(m, p)
    return r[: len(piv)]


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    x = solve(m, np.eye(n, dtype=np.int64), p)
    if x is None or rank(m, p) != n:
        raise ValueError("matrix is singular")
    return x


def factor_through(m: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Rank factorisation ``m = b @ c`` with ``b`` of full column rank."""
    r, piv = rref(m, p)
    return reduce(m, p)[:, piv], r[: len(piv)]


# -- monomial matrices --------------------------------------------------------


@dataclass(frozen=True)
class MonomialMatrix:
    """Column ``j`` is ``scalars[j]`` times basis vector ``perm[j]``."""

    perm: np.ndarray
    scalars: np.ndarray
    p: int

    @property
    def dim(self) -> int:
        return len(self.perm)

    def to_dense(self) -> np.ndarray:
        n = self.dim
        out = np.zeros((n, n), dtype=np.int64)
        out[self.perm, np.arange(n)] = self.scalars % self.p
        return out

    def apply(self, v: np.ndarray) -> np.ndarray:
        """``self @ v`` for a vector or a matrix of column vectors."""
        out = np.zeros_like(v)
        if v.ndim == 1:
            out[self.perm] = self.scalars * v
        else:
            out[self.perm] = self.scalars[:, None] * v
        return out % self.p

    def compose(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """``self @ other``."""
        perm = self.perm[other.perm]
        scal = (self.scalars[other.perm] * other.scalars) % self.p
        return MonomialMatrix(perm, scal, self.p)


# -- polynomials ----------------------------------------------------------------
# Polynomials are lists of ints, highest degree first (sympy galoistools layout).


def poly_eval_matrix(f: list[int], a: np.ndarray, one: np.ndarray, p: int) -> np.ndarray:
    """Horner evaluation of ``f`` at ``a`` where ``one`` plays the role of 1."""
    out = np.zeros_like(one)
    for c in f:
        out = (mulmod(out, a, p) + c * one) % p
    return out


def min_poly_from_powers(power_vecs, p: int, max_degree: int) -> list[int]:
    """Minimal monic relation among ``v_0, v_1, ...`` produced by the iterator."""
    basis = []
    for k, v in enumerate(power_vecs):
        basis.append(np.asarray(v, dtype=np.int64).ravel())
        mat = np.stack(basis, axis=1)
        ns = nullspace(mat, p)
        if ns.shape[1]:
            c = ns[:, 0]
            c = (c * inv_mod(c[-1], p)) % p
            return [int(x) for x in c[::-1]]
        if k > max_degree:
            break
    raise RuntimeError("no polynomial relation found")


def min_poly(m: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of a square matrix."""
    n = m.shape[0]
    m = reduce(m, p)

    def powers():
        cur = np.eye(n, dtype=np.int64)
        while True:
            yield cur
            cur = mulmod(cur, m, p)

    return min_poly_from_powers(powers(), p, n + 1)


def factor(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic irreducible factors with multiplicities."""
    if not any(f):
        raise ValueError("cannot factor the zero polynomial")
    _, facs = gt.gf_factor([ZZ(x % p) for x in f], p, ZZ)
    return [([int(c) for c in g], k) for g, k in facs]


def poly_mul(f, g, p):
    return [int(c) for c in gt.gf_mul([ZZ(x) for x in f], [ZZ(x) for x in g], p, ZZ)]


def poly_pow(f, k, p):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, f, p)
    return out


def crt_idempotent_polys(f: list[int], p: int) -> list[list[int]]:
    """Polynomials ``q_j`` with ``q_j = 1 mod g_j`` and ``0 mod g_k`` (k != j),
    where ``f = prod g_j`` is the primary factorisation."""
    prim = [poly_pow(g, k, p) for g, k in factor(f, p)]
    out = []
    for j, gj in enumerate(prim):
        rest = [1]
        for k, gk in enumerate(prim):
            if k != j:
                rest = poly_mul(rest, gk, p)
        s, t, h = gt.gf_gcdex([ZZ(x) for x in gj], [ZZ(x) for x in rest], p, ZZ)
        assert [int(x) for x in h] == [1]
        out.append(poly_mul([int(x) for x in t], rest, p))
    return out


def coprime_split(m: np.ndarray, f1: list[int], f2: list[int], p: int) -> tuple[np.ndarray, np.ndarray]:
    """Bases of ``ker f1(m)`` and ``ker f2(m)`` for coprime ``f1, f2`` with ``f1 f2 (m) = 0``."""
    g = gt.gf_gcd([ZZ(x) for x in f1], [ZZ(x) for x in f2], p, ZZ)
    if [int(x) for x in g] != [1]:
        raise ValueError("factors are not coprime")
    n = m.shape[0]
    one = np.eye(n, dtype=np.int64)
    if poly_eval_matrix(poly_mul(f1, f2, p), m, one, p).any():
        raise ValueError("f1*f2 does not annihilate the matrix")
    k1 = nullspace(poly_eval_matrix(f1, m, one, p), p)
    k2 = nullspace(poly_eval_matrix(f2, m, one, p), p)
    assert k1.shape[1] + k2.shape[1] == n
    return k1, k2
