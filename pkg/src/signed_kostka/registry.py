"""Reference copies of signed Young modules and signed p-Kostka numbers.

``Registry`` extracts Y(lambda|p mu) from M(lambda|p mu) by peeling off the
summands already known from strictly dominating labels.  ``BRegistry`` holds the
projective modules Q(alpha|beta) of the hyperoctahedral groups.  Multiplicities
are available by brute force (decompose and match, or the Hom pairing rank)
and through the recursion over the index sets Lambda((alpha|beta), rho).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import rep_engine as re
from .combinatorics import (
    RhoShape,
    bicompositions,
    comp,
    dominates,
    fmt_pair,
    is_p_restricted,
    lambda_block_size,
    lambda_set,
    labels,
    multinomial,
    pair_size,
    padic_expansion,
    unscale_label,
    validate_prime,
    vertex_shape,
)
from .sylow import symmetric

log = logging.getLogger(__name__)


def sort_pair(ab) -> tuple:
    """M(alpha|beta) only depends on the multisets of parts."""
    a, b = ab
    return (
        tuple(sorted((x for x in a if x), reverse=True)),
        tuple(sorted((x for x in b if x), reverse=True)),
    )


@dataclass
class RegistryEntry:
    label: tuple
    summand: re.Summand
    vertex: RhoShape
    provenance: str

    @property
    def dim(self) -> int:
        return self.summand.dim


class Registry:
    def __init__(self, p: int, seed: int = 0, cap: int = re.DEFAULT_DIM_CAP, budget: int = re.DEFAULT_BUDGET):
        self.p = validate_prime(p)
        self.seed, self.cap, self.budget = seed, cap, budget
        self.entries: dict[tuple, RegistryEntry] = {}
        self._modules: dict[tuple, re.SignedYoungRep] = {}
        self._decomps: dict[tuple, list[re.Summand]] = {}
        self._vertices: dict[int, RhoShape] = {}
        self.cache_root = None

    # -- cached building blocks -------------------------------------------------------

    def module(self, ab) -> re.SignedYoungRep:
        ab = sort_pair(ab)
        if ab not in self._modules:
            self._modules[ab] = re.signed_young_rep(ab, self.p)
        return self._modules[ab]

    def decomposition(self, ab) -> list[re.Summand]:
        ab = sort_pair(ab)
        if ab not in self._decomps:
            parts = re.decompose(self.module(ab), seed=self.seed, budget=self.budget, cap=self.cap)
            bad = [S for S in parts if S.status != "certified"]
            if bad:
                raise re.Unresolved(f"decomposition of M{fmt_pair(ab)} not certified")
            self._decomps[ab] = parts
        return self._decomps[ab]

    def vertex(self, S: re.Summand) -> RhoShape:
        key = id(S)
        if key not in self._vertices:
            self._vertices[key] = re.vertex_shape_of(S)
        return self._vertices[key]

    # -- registry ----------------------------------------------------------------------

    def match(self, S: re.Summand, candidates) -> tuple | None:
        """The label among ``candidates`` (most dominant first) of the indecomposable ``S``.

        A candidate whose registry copy can be built is compared by an exact
        isomorphism test.  Otherwise the candidate is accepted when S is a
        summand of M(candidate): since summands of M(L) only carry labels
        dominating L, the first such candidate in dominance order is the label.
        """
        vx = self.vertex(S)
        for L in candidates:
            lam, mu = unscale_label(L, self.p)
            if vertex_shape(lam, mu, self.p) != vx:
                continue
            try:
                Y = self.get(L)
            except re.Unresolved:
                if self.fixed_count(L, vx) and self.module_dim(L) >= S.dim:
                    if re.multiplicity(self.module(L), S):
                        return L
                continue
            if Y.dim == S.dim and re.is_isomorphic(S, Y.summand):
                return L
        return None

    @staticmethod
    def fixed_count(ab, rho: RhoShape) -> int:
        """Number of tabloids of shape ab fixed by P_rho (the Brauer quotient dimension of M(ab))."""
        return sum(lambda_block_size(e) for e in lambda_set(sort_pair(ab), rho))

    def module_dim(self, ab) -> int:
        a, b = sort_pair(ab)
        return multinomial(list(a) + list(b))

    def get(self, label) -> RegistryEntry:
        label = (comp(label[0]), comp(label[1]))
        if label in self.entries:
            return self.entries[label]
        n = pair_size(label)
        lam, mu = unscale_label(label, self.p)
        above = [L for L in labels(n, self.p) if L != label and dominates(L, label)]
        fresh = []
        for S in self.decomposition(label):
            if self.match(S, above) is None:
                fresh.append(S)
        if len(fresh) != 1:
            raise AssertionError(
                f"M{fmt_pair(label)} has {len(fresh)} summands not explained by dominating labels"
            )
        Y = fresh[0]
        Y.label = f"Y{fmt_pair(label)}"
        entry = RegistryEntry(label, Y, self.vertex(Y), provenance=f"M{fmt_pair(label)}")
        expected = vertex_shape(lam, mu, self.p)
        if entry.vertex != expected:
            raise AssertionError(f"vertex of Y{fmt_pair(label)} is {entry.vertex}, expected {expected}")
        self.entries[label] = entry
        log.info("registered Y%s: dim %d, vertex %s", fmt_pair(label), Y.dim, entry.vertex)
        return entry

    def build(self, n: int) -> dict:
        return {L: self.get(L) for L in labels(n, self.p)}

    # -- multiplicities -------------------------------------------------------------------

    def kostka_row(self, ab) -> dict:
        """``{label: [M(ab) : Y(label)]}`` by decomposing and matching every summand."""
        n = pair_size(ab)
        row = {L: 0 for L in labels(n, self.p)}
        for S in self.decomposition(ab):
            L = self.match(S, labels(n, self.p))
            if L is None:
                raise AssertionError(f"summand of M{fmt_pair(ab)} matches no registry entry")
            row[L] += 1
        return row


def signed_kostka(ab, label, registry: Registry, method: str = "decompose") -> int:
    """``[M(ab) : Y(label)]`` by brute force.

    ``method="decompose"`` counts isomorphic summands; ``method="pairing"`` uses
    the rank of the Hom composition pairing, which needs no decomposition of M.
    """
    label = (comp(label[0]), comp(label[1]))
    if pair_size(ab) != pair_size(label):
        raise ValueError("degrees differ")
    if method == "decompose":
        Y = registry.get(label)
        return sum(
            1
            for S in registry.decomposition(ab)
            if S.dim == Y.dim and registry.vertex(S) == Y.vertex and re.is_isomorphic(S, Y.summand)
        )
    if method == "pairing":
        Y = registry.get(label)
        return re.multiplicity(registry.module(ab), Y.summand)
    raise ValueError(f"unknown method {method}")


# -- hyperoctahedral projectives ------------------------------------------------------------


def restricted_pairs(m: int, p: int) -> list[tuple]:
    """RP^2(m): pairs of p-restricted partitions of total size m."""
    return [ab for ab in bicompositions(m) if is_p_restricted(ab[0], p) and is_p_restricted(ab[1], p)]


@dataclass
class BRegistryEntry:
    label: tuple
    rep: re.DenseRep
    summand: re.Summand


class BRegistry:
    def __init__(self, registry: Registry):
        self.registry = registry
        self.p = registry.p
        self.entries: dict[tuple, BRegistryEntry] = {}

    def projective_cover(self, alpha) -> re.Rep:
        if not alpha:
            return re.DenseRep(symmetric(0), self.p, [], label="F").with_dim(1)
        Y = self.registry.get((alpha, ()))
        return re.restrict(Y.summand)

    def get(self, label) -> BRegistryEntry:
        label = (comp(label[0]), comp(label[1]))
        if label not in self.entries:
            a, b = label
            if not (is_p_restricted(a, self.p) and is_p_restricted(b, self.p)):
                raise ValueError(f"{fmt_pair(label)} is not a pair of p-restricted partitions")
            Q = re.bifunctor_F(self.projective_cover(a), self.projective_cover(b), self.p)
            Q.label = f"Q{fmt_pair(label)}"
            S = re.whole(Q)
            re.certify(S)
            if not re.is_projective(S):
                raise AssertionError(f"{Q.label} is not projective")
            self.entries[label] = BRegistryEntry(label, Q, S)
        return self.entries[label]

    def build(self, m: int) -> dict:
        return {L: self.get(L) for L in restricted_pairs(m, self.p)}

    def peeling_check(self, m: int) -> dict:
        """Rebuild the projectives from V_2 modules by dominance peeling and compare.

        For each (lambda|mu) in RP^2(m), most dominant first, the projective
        summands of V_2(lambda|mu) not accounted for by more dominant labels
        should be exactly one copy of Q(lambda|mu).
        """
        pairs = restricted_pairs(m, self.p)
        length = max(m, 1)
        from .combinatorics import dominance_vector

        pairs.sort(key=lambda ab: (dominance_vector(ab, length), ab), reverse=True)
        report = {}
        for L in pairs:
            V = re.v2_rep(L, self.p)
            parts = re.decompose(V)
            proj = [S for S in parts if re.is_projective(S)]
            counts = {}
            for S in proj:
                hit = [L2 for L2 in pairs if self.get(L2).rep.dim == S.dim and re.is_isomorphic(S, self.get(L2).summand)]
                assert len(hit) == 1
                counts[hit[0]] = counts.get(hit[0], 0) + 1
            fresh = {L2: c for L2, c in counts.items() if not (L2 != L and dominates(L2, L))}
            report[L] = fresh == {L: 1}
            if not report[L]:
                raise AssertionError(f"peeling mismatch at {fmt_pair(L)}: {counts}")
        return report


def b_multiplicity(gd, label, b_registry: BRegistry) -> int:
    """``[V_2(gd) : Q(label)]``."""
    gd = sort_pair(gd)
    V = re.v2_rep(gd, b_registry.p)
    Q = b_registry.get(label)
    if V.dim % 1 or pair_size(gd) != pair_size(label):
        raise ValueError("degrees differ")
    return re.multiplicity(V, Q.summand)


# -- the recursion over Lambda ------------------------------------------------------------


class KostkaEngine:
    """Shares one S-registry and the hyperoctahedral registries across calls."""

    def __init__(self, registry: Registry):
        self.registry = registry
        self.p = registry.p
        self.b = BRegistry(registry)
        self._base: dict = {}
        self._bmult: dict = {}

    def _base_mult(self, gd0, lam0) -> int:
        key = (sort_pair(gd0), lam0)
        if key not in self._base:
            if pair_size(key[0]) == 0:
                self._base[key] = 1
            else:
                self._base[key] = signed_kostka(key[0], (lam0, ()), self.registry, method="pairing")
        return self._base[key]

    def _b_mult(self, gd, lab) -> int:
        key = (sort_pair(gd), lab)
        if key not in self._bmult:
            self._bmult[key] = 1 if pair_size(gd) == 0 else b_multiplicity(gd, lab, self.b)
        return self._bmult[key]

    def klyachko(self, ab, label) -> int:
        p = self.p
        lam, mu = unscale_label((comp(label[0]), comp(label[1])), p)
        rho = vertex_shape(lam, mu, p)
        lay_l = padic_expansion(lam, p)
        lay_m = padic_expansion(mu, p)

        def layer(lays, i):
            return lays[i] if 0 <= i < len(lays) else ()

        total = 0
        for gam, dlt in lambda_set(ab, rho):
            term = self._base_mult((gam[0], dlt[0]), layer(lay_l, 0))
            for i in range(1, len(gam)):
                if not term:
                    break
                term *= self._b_mult((gam[i], dlt[i]), (layer(lay_l, i), layer(lay_m, i - 1)))
            total += term
        return total


def klyachko_kostka(ab, label, registry: Registry, engine: KostkaEngine | None = None) -> int:
    engine = engine or KostkaEngine(registry)
    return engine.klyachko(ab, label)


def k_table(n: int, p: int, registry: Registry | None = None, method: str = "brute", rows: str = "all") -> dict:
    """Table ``{(ab, label): mult}``; ``method`` in brute, klyachko, both.

    ``rows="all"`` runs over P^2(n), ``rows="labels"`` only over the label shapes.
    """
    if method not in ("brute", "klyachko", "both"):
        raise ValueError(f"unknown method {method}")
    registry = registry or Registry(p)
    engine = KostkaEngine(registry)
    table = {}
    shapes = list(labels(n, p)) if rows == "labels" else list(bicompositions(n))
    for ab in shapes:
        row = registry.kostka_row(ab) if method in ("brute", "both") else None
        for L in labels(n, p):
            if method == "klyachko":
                table[(ab, L)] = engine.klyachko(ab, L)
                continue
            table[(ab, L)] = row[L]
            if method == "both":
                k = engine.klyachko(ab, L)
                if k != row[L]:
                    raise AssertionError(
                        f"brute force and recursion disagree at [M{fmt_pair(ab)} : Y{fmt_pair(L)}]: {row[L]} vs {k}"
                    )
    return table
