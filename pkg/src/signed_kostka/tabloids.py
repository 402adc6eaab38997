"""Signed (alpha|beta)-tabloids and the symmetric group action on them.

A tabloid is stored canonically as a tuple of sorted rows, alpha-rows first,
together with its shape.  Permutations are tuples ``g`` of length ``n`` with
``g[i-1]`` the image of ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinatorics import RhoShape, comp, multinomial, pair_size

DEFAULT_TABLOID_CAP = 400_000


@dataclass(frozen=True)
class Tabloid:
    shape: tuple  # (alpha, beta); alpha/beta may have internal zeros
    rows: tuple  # tuple of sorted tuples, len(alpha) + len(beta) rows

    @property
    def alpha_rows(self) -> tuple:
        return self.rows[: len(self.shape[0])]

    @property
    def beta_rows(self) -> tuple:
        return self.rows[len(self.shape[0]) :]

    def __str__(self) -> str:
        def side(rows):
            return "|".join("".join(str(x) for x in r) for r in rows)

        return "{(" + side(self.alpha_rows) + ")|(" + side(self.beta_rows) + ")}"


def _row_lengths(shape) -> list[int]:
    return list(shape[0]) + list(shape[1])


def standard_tableau(shape) -> tuple:
    """Rows of the row-standard tableau filled 1..n in order, alpha-rows first."""
    rows, k = [], 1
    for length in _row_lengths(shape):
        rows.append(tuple(range(k, k + length)))
        k += length
    return tuple(rows)


def _parity(seq: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def canonicalize(shape, rows: Sequence[Sequence[int]]) -> tuple[int, Tabloid]:
    """Sort every row; beta-rows contribute the parity of their sorting permutation."""
    na = len(shape[0])
    if [len(r) for r in rows] != _row_lengths(shape):
        raise ValueError("rows do not match the shape")
    sign = 1
    for k, r in enumerate(rows):
        if k >= na:
            sign *= _parity(r)
    return sign, Tabloid(tuple(shape), tuple(tuple(sorted(r)) for r in rows))


def act(g: Sequence[int], t: Tabloid) -> tuple[int, Tabloid]:
    n = sum(len(r) for r in t.rows)
    if len(g) != n:
        raise ValueError(f"permutation of degree {len(g)} applied to a tabloid of degree {n}")
    return canonicalize(t.shape, [[g[x - 1] for x in r] for r in t.rows])


def _enumerate_rows(lengths, remaining):
    if not lengths:
        yield ()
        return
    for row in itertools.combinations(remaining, lengths[0]):
        rest = [x for x in remaining if x not in row]
        for tail in _enumerate_rows(lengths[1:], rest):
            yield (row,) + tail


def enumerate_tabloids(shape, cap: int = DEFAULT_TABLOID_CAP) -> list[Tabloid]:
    lengths = _row_lengths(shape)
    n = sum(lengths)
    count = multinomial(lengths)
    if count > cap:
        raise ValueError(f"{count} tabloids exceed the cap {cap}")
    return [Tabloid(tuple(shape), rows) for rows in _enumerate_rows(lengths, list(range(1, n + 1)))]


# -- permutations ----------------------------------------------------------------


def perm_from_cycles(cycles: Sequence[Sequence[int]], n: int) -> tuple:
    g = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            g[a - 1] = b
    return tuple(g)


def perm_mul(g: Sequence[int], h: Sequence[int]) -> tuple:
    """``g h``: apply ``h`` first."""
    return tuple(g[x - 1] for x in h)


def perm_inv(g: Sequence[int]) -> tuple:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x - 1] = i + 1
    return tuple(out)


def orbits(gens: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(1, n + 1):
            a, b = find(i), find(g[i - 1])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


# -- vectorised basis ------------------------------------------------------------


class TabloidBasis:
    """The ordered basis of a signed permutation module, with a fast action.

    ``entries`` is an ``(N, n)`` array: row ``t`` lists the entries of tabloid
    ``t`` row by row, i.e. it is the row-standard tableau of that tabloid and,
    read as a permutation, maps the standard tabloid onto it.
    """

    def __init__(self, shape, cap: int = DEFAULT_TABLOID_CAP):
        self.shape = (tuple(shape[0]), tuple(shape[1]))
        self.n = pair_size(self.shape)
        lengths = _row_lengths(self.shape)
        self.row_of_pos = np.repeat(np.arange(len(lengths)), lengths)
        self.beta_segments = []
        start = 0
        for k, length in enumerate(lengths):
            if k >= len(self.shape[0]) and length > 1:
                self.beta_segments.append((start, start + length))
            start += length
        count = multinomial(lengths)
        if count > cap:
            raise ValueError(f"{count} tabloids exceed the cap {cap}")
        self.size = count
        if self.n == 0:
            self.entries = np.zeros((1, 0), dtype=np.int64)
        else:
            self.entries = np.array(
                [sum(rows, ()) for rows in _enumerate_rows(lengths, list(range(1, self.n + 1)))],
                dtype=np.int64,
            ).reshape(count, self.n)
        self._base = max(len(lengths), 1)
        codes = self._codes_of(self.entries)
        self._order = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._order]

    def tabloid(self, i: int) -> Tabloid:
        e = self.entries[i]
        rows, start = [], 0
        for length in _row_lengths(self.shape):
            rows.append(tuple(int(x) for x in e[start : start + length]))
            start += length
        return Tabloid(self.shape, tuple(rows))

    def index(self, t: Tabloid) -> int:
        flat = np.array([sum(t.rows, ())], dtype=np.int64).reshape(1, self.n)
        return int(self.lookup(flat)[0])

    def _codes_of(self, filled: np.ndarray) -> np.ndarray:
        """Integer code of the row-assignment of each filled tableau."""
        m = filled.shape[0]
        labels = np.zeros((m, self.n), dtype=np.int64)
        if self.n:
            labels[np.arange(m)[:, None], filled - 1] = self.row_of_pos[None, :]
        weights = self._base ** np.arange(self.n, dtype=np.int64)
        return labels @ weights

    def lookup(self, filled: np.ndarray) -> np.ndarray:
        codes = self._codes_of(filled)
        pos = np.searchsorted(self._sorted_codes, codes)
        idx = self._order[np.minimum(pos, self.size - 1)]
        assert np.array_equal(self._sorted_codes[np.minimum(pos, self.size - 1)], codes)
        return idx

    def _signs(self, filled: np.ndarray) -> np.ndarray:
        sign = np.ones(filled.shape[0], dtype=np.int64)
        for a, b in self.beta_segments:
            seg = filled[:, a:b]
            inv = np.zeros(filled.shape[0], dtype=np.int64)
            for i in range(b - a):
                for j in range(i + 1, b - a):
                    inv += seg[:, i] > seg[:, j]
            sign *= 1 - 2 * (inv % 2)
        return sign

    def act_filled(self, filled: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Indices and signs of the tabloids of arbitrary filled tableaux."""
        return self.lookup(filled), self._signs(filled)

    def action(self, g: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
        """``g . t_i = sign[i] * t_{index[i]}`` for every basis tabloid."""
        if self.n == 0:
            return np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64)
        garr = np.asarray(g, dtype=np.int64)
        if garr.shape != (self.n,):
            raise ValueError("permutation degree mismatch")
        return self.act_filled(garr[self.entries - 1])

    def act_on_one(self, perms: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Act by many permutations (rows of ``perms``) on tabloid ``i``."""
        filled = np.take_along_axis(perms, np.broadcast_to(self.entries[i] - 1, perms.shape), axis=1)
        return self.act_filled(filled)

    def fixed_indices(self, gens: Sequence[Sequence[int]]) -> np.ndarray:
        """Tabloids whose rows are unions of orbits of ``<gens>``."""
        keep = np.ones(self.size, dtype=bool)
        for g in gens:
            idx, sgn = self.action(g)
            same = idx == np.arange(self.size)
            assert np.all(sgn[same] == 1), "tabloid fixed up to a nontrivial sign"
            keep &= same
        return np.flatnonzero(keep)


def fixed_tabloids(shape, gens: Sequence[Sequence[int]]) -> list[Tabloid]:
    basis = TabloidBasis(shape)
    return [basis.tabloid(i) for i in basis.fixed_indices(gens)]


# -- rho-types, Theta and concatenation -------------------------------------------


def orbit_intervals(rho: RhoShape) -> list[list[tuple[int, int]]]:
    """``O[i][j-1] = (first, last)`` of the j-th orbit of size p^i."""
    out, offset = [], 0
    for i, c in enumerate(rho.mults):
        size = rho.p**i
        out.append([(offset + (j - 1) * size + 1, offset + j * size) for j in range(1, c + 1)])
        offset += c * size
    return out


def _check_fixed(t: Tabloid, rho: RhoShape):
    where = {x: k for k, r in enumerate(t.rows) for x in r}
    for level in orbit_intervals(rho):
        for a, b in level:
            if len({where[x] for x in range(a, b + 1)}) != 1:
                raise ValueError(f"{t} is not fixed by P_rho for rho={rho}")
    return where


def rho_type(t: Tabloid, rho: RhoShape) -> tuple:
    where = _check_fixed(t, rho)
    na, nrows = len(t.shape[0]), len(t.rows)
    gam, dlt = [], []
    for level in orbit_intervals(rho):
        counts = [0] * nrows
        for a, _ in level:
            counts[where[a]] += 1
        gam.append(comp(counts[:na]))
        dlt.append(comp(counts[na:]))
    return tuple(gam), tuple(dlt)


def theta(t: Tabloid, rho: RhoShape) -> tuple:
    where = _check_fixed(t, rho)
    gam, dlt = rho_type(t, rho)
    na, nrows = len(t.shape[0]), len(t.rows)
    out = []
    for i, level in enumerate(orbit_intervals(rho)):
        rows = [[] for _ in range(nrows)]
        for j, (a, _) in enumerate(level, start=1):
            rows[where[a]].append(j)
        ga = tuple(len(r) for r in rows[:na])
        gb = tuple(len(r) for r in rows[na:])
        shape = (comp(ga), comp(gb))
        rows = rows[: len(shape[0])] + rows[na : na + len(shape[1])]
        assert shape == (gam[i], dlt[i])
        out.append(Tabloid(shape, tuple(tuple(r) for r in rows)))
    return tuple(out)


def concat_tabloids(t1: Tabloid, t2: Tabloid) -> Tabloid:
    """Row-wise union; ``t2`` must already live on ``{m+1, ..., m+N}``."""
    from .combinatorics import padded_sum

    a1, b1 = t1.alpha_rows, t1.beta_rows
    a2, b2 = t2.alpha_rows, t2.beta_rows

    def merge(x, y):
        k = max(len(x), len(y))
        x = list(x) + [()] * (k - len(x))
        y = list(y) + [()] * (k - len(y))
        return [tuple(sorted(r + s)) for r, s in zip(x, y)]

    alpha = padded_sum(t1.shape[0], t2.shape[0])
    beta = padded_sum(t1.shape[1], t2.shape[1])
    ra, rb = merge(a1, a2), merge(b1, b2)
    return Tabloid((alpha, beta), tuple(ra[: len(alpha)] + rb[: len(beta)]))
