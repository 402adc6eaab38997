"""Compositions, partitions, pairs of partitions and the index sets built on them.

Compositions are plain tuples of non-negative integers with no trailing zero;
the empty tuple stands for the empty composition.  A pair ``(alpha, beta)`` is
an ordinary 2-tuple of compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

Composition = tuple
Pair = tuple  # (alpha, beta)


def validate_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, else raise ``ValueError``."""
    p = int(p)
    if p < 3 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


def comp(parts: Sequence[int]) -> Composition:
    """Normalise a sequence into a composition (trailing zeros dropped)."""
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def is_partition(a: Sequence[int]) -> bool:
    return all(x > 0 for x in a) and all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def is_p_restricted(a: Sequence[int], p: int) -> bool:
    padded = list(a) + [0]
    return all(padded[i] - padded[i + 1] < p for i in range(len(a)))


def size(a: Sequence[int]) -> int:
    return int(sum(a))


def pair_size(ab: Pair) -> int:
    return size(ab[0]) + size(ab[1])


def scale(q: int, a: Sequence[int]) -> Composition:
    if q == 0:
        return ()
    return comp([q * x for x in a])


def concat(a: Sequence[int], b: Sequence[int]) -> Composition:
    return comp(list(a) + list(b))


def padded_sum(a: Sequence[int], b: Sequence[int]) -> Composition:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return comp([x + y for x, y in zip(a, b)])


def padded_diff(a: Sequence[int], b: Sequence[int]) -> Composition:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    if any(y > x for x, y in zip(a, b)):
        raise ValueError(f"cannot subtract {tuple(b)} from {tuple(a)}")
    return comp([x - y for x, y in zip(a, b)])


def conjugate(lam: Sequence[int]) -> Composition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for x in parts:
        out //= factorial(x)
    return out


def partitions(n: int, max_part: int | None = None) -> Iterator[Composition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions_bounded(total: int, bounds: Sequence[int]) -> Iterator[tuple]:
    """Non-negative vectors ``c`` with ``c[i] <= bounds[i]`` summing to ``total``."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_cap = sum(bounds[1:])
    for x in range(min(total, bounds[0]), max(0, total - rest_cap) - 1, -1):
        for tail in compositions_bounded(total - x, bounds[1:]):
            yield (x,) + tail


def bicompositions(n: int) -> Iterator[Pair]:
    """All pairs of partitions ``(alpha|beta)`` of total size ``n``."""
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield (a, b)


# -- dominance ---------------------------------------------------------------


def _partial_sums(a: Sequence[int], length: int) -> list[int]:
    out, s = [], 0
    for k in range(length):
        s += a[k] if k < len(a) else 0
        out.append(s)
    return out


def dominance_vector(ab: Pair, length: int) -> tuple:
    lam, nu = ab
    a = _partial_sums(lam, length)
    b = [size(lam) + x for x in _partial_sums(nu, length)]
    return tuple(a + b)


def dominates(x: Pair, y: Pair) -> bool:
    """True iff ``x`` dominates ``y`` in the order on pairs of partitions."""
    if pair_size(x) != pair_size(y):
        raise ValueError(f"size mismatch: {x} vs {y}")
    for part in (*x, *y):
        if not is_partition(part):
            raise ValueError(f"not a partition: {part}")
    length = max(len(x[0]), len(x[1]), len(y[0]), len(y[1]), 1)
    vx, vy = dominance_vector(x, length), dominance_vector(y, length)
    return all(s >= t for s, t in zip(vx, vy))


# -- p-adic expansions -------------------------------------------------------


def padic_expansion(lam: Sequence[int], p: int) -> list[Composition]:
    """Layers ``lam(0), lam(1), ...`` with ``lam = sum p^i lam(i)``, each p-restricted.

    Works on the differences ``lam_i - lam_{i+1}``: their base-p digits give the
    differences of each layer, which makes existence and uniqueness immediate.
    """
    validate_prime(p)
    lam = comp(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    diffs = [lam[i] - (lam[i + 1] if i + 1 < len(lam) else 0) for i in range(len(lam))]
    layers: list[Composition] = []
    while any(diffs):
        digits = [d % p for d in diffs]
        diffs = [d // p for d in diffs]
        layers.append(comp([sum(digits[i:]) for i in range(len(digits))]))
    # round-trip check
    total: Composition = ()
    for i, layer in enumerate(layers):
        total = padded_sum(total, scale(p**i, layer))
    assert total == lam and all(is_p_restricted(x, p) for x in layers)
    return layers


def _layer(layers: list, i: int) -> Composition:
    return layers[i] if 0 <= i < len(layers) else ()


@dataclass(frozen=True)
class RhoShape:
    """The Young shape ``(1^{n_0}, p^{n_1}, ..., (p^r)^{n_r})``."""

    mults: tuple
    p: int

    def __post_init__(self):
        m = list(self.mults)
        while m and m[-1] == 0:
            m.pop()
        object.__setattr__(self, "mults", tuple(m))

    @property
    def degree(self) -> int:
        return sum(c * self.p**i for i, c in enumerate(self.mults))

    def layout(self) -> Composition:
        """Block sizes in ascending order, 1-blocks first."""
        return tuple(self.p**i for i, c in enumerate(self.mults) for _ in range(c))

    def n(self, i: int) -> int:
        return self.mults[i] if i < len(self.mults) else 0

    @property
    def log_order(self) -> int:
        """Exponent of p in |P_rho|."""
        return sum(c * (self.p**i - 1) // (self.p - 1) for i, c in enumerate(self.mults))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.layout()) + ")"


def vertex_shape(lam: Sequence[int], mu: Sequence[int], p: int) -> RhoShape:
    lay_l = padic_expansion(lam, p)
    lay_m = padic_expansion(mu, p)
    r = max(len(lay_l), len(lay_m) + 1)
    mults = [size(_layer(lay_l, 0))]
    for i in range(1, r):
        mults.append(size(_layer(lay_l, i)) + size(_layer(lay_m, i - 1)))
    return RhoShape(tuple(mults), p)


def ell_p(lam: Sequence[int], mu: Sequence[int], p: int) -> int:
    """Index of the top nonzero layer; 0 for the empty label by convention."""
    return max(len(vertex_shape(lam, mu, p).mults) - 1, 0)


def rho_shapes(n: int, p: int) -> list[RhoShape]:
    """All shapes of degree ``n``, largest Sylow order first."""
    powers = [1]
    while powers[-1] * p <= n:
        powers.append(powers[-1] * p)

    def rec(rem, i):
        if i < 0:
            if rem == 0:
                yield ()
            return
        for c in range(rem // powers[i], -1, -1):
            for rest in rec(rem - c * powers[i], i - 1):
                yield rest + (c,)

    shapes = [RhoShape(m, p) for m in rec(n, len(powers) - 1)]
    shapes.sort(key=lambda s: (-s.log_order, tuple(-x for x in reversed(s.mults))))
    return shapes


def sylow_shape(n: int, p: int) -> RhoShape:
    digits = []
    while n:
        digits.append(n % p)
        n //= p
    return RhoShape(tuple(digits), p)


# -- the index set Lambda((alpha|beta), rho) ----------------------------------


def _digit_splits(x: int, r: int, p: int) -> list[tuple]:
    """All ``(c_0..c_{r-1})`` with ``sum c_i p^i = x``."""
    if r == 0:
        return [()] if x == 0 else []
    out = []
    top = p ** (r - 1)
    for c in range(x // top, -1, -1):
        for rest in _digit_splits(x - c * top, r - 1, p):
            out.append(rest + (c,))
    return out


def lambda_set(ab: Pair, rho: RhoShape) -> list[tuple]:
    """Entries ``((gamma_0..gamma_r), (delta_0..delta_r))`` as in the Brauer quotient bookkeeping."""
    alpha, beta = ab
    p = rho.p
    if pair_size(ab) != rho.degree:
        raise ValueError("size mismatch between shape and rho")
    r = max(len(rho.mults), 1)
    rows = list(alpha) + list(beta)
    choices = [_digit_splits(x, r, p) for x in rows]
    target = [rho.n(i) for i in range(r)]
    out = []

    def rec(j, used, acc):
        if j == len(rows):
            if used == target:
                out.append(tuple(acc))
            return
        for c in choices[j]:
            new = [u + v for u, v in zip(used, c)]
            if all(u <= t for u, t in zip(new, target)):
                rec(j + 1, new, acc + [c])

    rec(0, [0] * r, [])
    entries = []
    na = len(alpha)
    for acc in out:
        gam = tuple(comp([acc[j][i] for j in range(na)]) for i in range(r))
        dlt = tuple(comp([acc[j][i] for j in range(na, len(rows))]) for i in range(r))
        entries.append((gam, dlt))
    entries.sort()
    for gam, dlt in entries:
        assert _recombine(gam, p) == comp(alpha) and _recombine(dlt, p) == comp(beta)
        assert all(size(gam[i]) + size(dlt[i]) == rho.n(i) for i in range(r))
    return entries


def _recombine(layers, p) -> Composition:
    total: Composition = ()
    for i, layer in enumerate(layers):
        total = padded_sum(total, scale(p**i, layer))
    return total


def lambda_block_size(entry: tuple) -> int:
    gam, dlt = entry
    out = 1
    for g, d in zip(gam, dlt):
        out *= multinomial(list(g) + list(d))
    return out


# -- labels ------------------------------------------------------------------


@lru_cache(maxsize=None)
def labels(n: int, p: int) -> tuple:
    """Labels ``(lambda|p mu)`` of degree ``n``, most dominant first.

    The second component is stored already scaled by ``p``.
    """
    validate_prime(p)
    out = []
    for m in range(n // p + 1):
        for mu in partitions(m):
            for lam in partitions(n - p * m):
                out.append((lam, scale(p, mu)))
    length = max(n, 1)
    out.sort(key=lambda ab: (dominance_vector(ab, length), ab), reverse=True)
    return tuple(out)


def unscale_label(label: Pair, p: int) -> tuple:
    lam, pmu = label
    if any(x % p for x in pmu):
        raise ValueError(f"{label} is not of the form (lambda|p mu)")
    return lam, tuple(x // p for x in pmu)


def fmt_comp(a: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in a) + ")" if a else "∅"


def fmt_pair(ab: Pair) -> str:
    return f"({fmt_comp(ab[0])}|{fmt_comp(ab[1])})"
