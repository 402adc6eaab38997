"""Sylow p-subgroups P_rho of Young subgroups, and group descriptors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import RhoShape, sylow_shape
from .tabloids import perm_inv, perm_mul

DEFAULT_ENUM_CAP = 3**6


@dataclass(frozen=True)
class SignedPerm:
    """Element ``(g_1..g_m; sigma)`` of C2 wr S_m; ``signs[i]`` sits at position i+1."""

    signs: tuple
    perm: tuple

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        # (g; s)(h; t) = (g_i h_{s^-1(i)}; s t)
        sinv = perm_inv(self.perm)
        signs = tuple(self.signs[i] * other.signs[sinv[i] - 1] for i in range(len(self.perm)))
        return SignedPerm(signs, perm_mul(self.perm, other.perm))

    def inverse(self) -> "SignedPerm":
        tinv = perm_inv(self.perm)
        # (g; s)^-1 = (h; s^-1) with h_i = g_{s(i)}
        signs = tuple(self.signs[self.perm[i] - 1] for i in range(len(self.perm)))
        return SignedPerm(signs, tinv)

    @staticmethod
    def identity(m: int) -> "SignedPerm":
        return SignedPerm((1,) * m, tuple(range(1, m + 1)))


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "symmetric" or "hyperoctahedral"
    degree: int

    def __post_init__(self):
        if self.kind not in ("symmetric", "hyperoctahedral") or self.degree < 0:
            raise ValueError(f"bad group {self.kind}({self.degree})")

    def generators(self) -> list:
        n = self.degree
        trans = [adjacent_transposition(i, n) for i in range(1, n)]
        if self.kind == "symmetric":
            return trans
        gens = [SignedPerm((1,) * n, t) for t in trans]
        if n:
            gens.append(SignedPerm((-1,) + (1,) * (n - 1), tuple(range(1, n + 1))))
        return gens

    def embed(self, g):
        """Lift a permutation of the top group into this group."""
        if self.kind == "symmetric":
            return tuple(g)
        return SignedPerm((1,) * self.degree, tuple(g))


def symmetric(n: int) -> GroupSpec:
    return GroupSpec("symmetric", n)


def hyperoctahedral(m: int) -> GroupSpec:
    return GroupSpec("hyperoctahedral", m)


def adjacent_transposition(i: int, n: int) -> tuple:
    g = list(range(1, n + 1))
    g[i - 1], g[i] = i + 1, i
    return tuple(g)


def word_in_adjacent(g) -> list[int]:
    """Indices ``i`` with ``g = s_{i_1} s_{i_2} ...`` (bubble sort)."""
    arr = list(g)
    word = []
    # sort arr to identity by right multiplication with adjacent transpositions
    n = len(arr)
    for end in range(n - 1, 0, -1):
        for i in range(end):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
    # g s_{w1} s_{w2} ... = id  =>  g = ... s_{w2} s_{w1}
    return word[::-1]


@dataclass(frozen=True)
class PSubgroup:
    degree: int
    generators: tuple
    shape: RhoShape | None = field(default=None)

    @property
    def order(self) -> int:
        if self.shape is None:
            return len(enumerate_group(self))
        return self.shape.p**self.shape.log_order


def _block_gens(d: int, p: int, offset: int, n: int) -> list[tuple]:
    """Generators of P_{p^d} acting on ``offset+1 .. offset+p^d``."""
    if d == 0:
        return []
    size = p ** (d - 1)
    gens = _block_gens(d - 1, p, offset, n)
    g = list(range(1, n + 1))
    for x in range(offset + 1, offset + p**d + 1):
        g[x - 1] = offset + ((x - offset - 1 + size) % p**d) + 1
    gens.append(tuple(g))
    return gens


def sylow_generators(rho: RhoShape) -> PSubgroup:
    n, p = rho.degree, rho.p
    gens, offset = [], 0
    for i, c in enumerate(rho.mults):
        for _ in range(c):
            gens += _block_gens(i, p, offset, n)
            offset += p**i
    return PSubgroup(n, tuple(gens), rho)


def sylow_of_symmetric(n: int, p: int) -> PSubgroup:
    return sylow_generators(sylow_shape(n, p))


def enumerate_group(P: PSubgroup, cap: int = DEFAULT_ENUM_CAP) -> list[tuple]:
    ident = tuple(range(1, P.degree + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in P.generators:
                y = perm_mul(g, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise ValueError(f"group order exceeds the enumeration cap {cap}")
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)
