"""Verifiers for the structural statements about signed Young modules.

Every verifier returns a ``Report``: a list of named checks, each marked
pass / fail / unresolved / skipped, with a witness string on failure.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import fp_linalg as fl
from . import rep_engine as re
from .combinatorics import (
    bicompositions,
    ell_p,
    fmt_pair,
    lambda_block_size,
    lambda_set,
    labels,
    padded_sum,
    padic_expansion,
    pair_size,
    scale,
    unscale_label,
    validate_prime,
    vertex_shape,
)
from .registry import BRegistry, KostkaEngine, Registry, b_multiplicity, restricted_pairs, signed_kostka, sort_pair

PASS, FAIL, UNRESOLVED, SKIPPED = "pass", "fail", "unresolved", "skipped"


@dataclass
class Check:
    name: str
    outcome: str
    detail: str = ""


@dataclass
class Report:
    command: str
    params: dict
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    def add(self, name: str, ok: bool | None, detail: str = "", skipped: bool = False) -> None:
        if skipped:
            outcome = SKIPPED
        elif ok is None:
            outcome = UNRESOLVED
        else:
            outcome = PASS if ok else FAIL
        self.checks.append(Check(name, outcome, detail))

    def count(self, outcome: str) -> int:
        return sum(1 for c in self.checks if c.outcome == outcome)

    @property
    def violations(self) -> list:
        return [c for c in self.checks if c.outcome == FAIL]

    @property
    def unresolved(self) -> list:
        return [c for c in self.checks if c.outcome == UNRESOLVED]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unresolved

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 1
        return 2 if self.unresolved else 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "seconds": round(self.seconds, 3),
            "summary": {k: self.count(k) for k in (PASS, FAIL, UNRESOLVED, SKIPPED)},
            "checks": [c.__dict__ for c in self.checks],
        }


class _timed:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.t0
        return False


# -- indecomposability classification -----------------------------------------------------


def classified_indecomposable(ab, p: int) -> bool:
    a, b = sort_pair(ab)
    if len(a) <= 1 and len(b) <= 1:
        m, n = sum(a), sum(b)
        return m == 0 or n == 0 or (m + n) % p == 0
    for x, y in ((a, b), (b, a)):
        if not y and len(x) == 2 and x[1] == 1 and (x[0] + 1) % p == 0:
            return True
    return False


def classified_end_dim(ab, p: int) -> int | None:
    """End dimension predicted for the indecomposable cases, else ``None``."""
    if not classified_indecomposable(ab, p):
        return None
    a, b = sort_pair(ab)
    return 1 if (not a or not b) and len(a) + len(b) <= 1 else 2


def _dual_numbers(M: re.SignedYoungRep) -> bool:
    """A two-dimensional End(M) is F[x]/(x^2) iff a non-scalar element has a repeated linear min poly."""
    p = M.p
    for x in re.independent(re.hom_space(re.whole(M), re.whole(M)), p):
        f = fl.min_poly(x, p)
        if len(f) == 3:
            facs = fl.factor(f, p)
            return len(facs) == 1 and facs[0][1] == 2
    return False


def classify_module(ab, p: int, seed: int = 0) -> dict:
    """Decide indecomposability of M(ab), with End dimension when cheap."""
    M = re.signed_young_rep(ab, p)
    h = re.end_dimension(M)
    out = {"shape": sort_pair(ab), "dim": M.dim, "end_dim": h, "indecomposable": None, "how": ""}
    if h == 1:
        out.update(indecomposable=True, how="End is one-dimensional")
        return out
    if re.split_witness(M, seed=seed, tries=4):
        out.update(indecomposable=False, how="endomorphism with two primary components")
        return out
    try:
        parts = re.decompose(M, seed=seed)
    except re.Unresolved as exc:
        out["how"] = str(exc)
        return out
    if len(parts) > 1:
        out.update(indecomposable=False, how=f"{len(parts)} summands")
    elif parts[0].status == "certified":
        out.update(indecomposable=True, how="End is local")
        if h == 2:
            out["dual_numbers"] = _dual_numbers(M)
    else:
        out["how"] = "locality not certified"
    return out


def classification_shapes(n_max: int, p: int, extra_max: int | None = None) -> list:
    shapes = [ab for n in range(1, n_max + 1) for ab in bicompositions(n)]
    top = extra_max if extra_max is not None else 0
    for n in range(n_max + 1, top + 1):
        if n % p == 0:
            shapes += [((m,), (n - m,)) if 0 < m < n else (((n,), ()) if m == n else ((), (n,))) for m in range(n + 1)]
        if (n + 1) % p == 0:
            shapes += [((n - 1, 1), ()), ((), (n - 1, 1))]
    seen, out = set(), []
    for ab in shapes:
        key = sort_pair(ab)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def _classify_job(args):
    ab, p, seed = args
    return classify_module(ab, p, seed)


def verify_indecomposable(
    n_max: int, p: int, extra=(), extra_max: int | None = None, seed: int = 0, jobs: int = 1
) -> Report:
    """All of P^2(n) for n <= n_max, plus the one-row and hook cases up to ``extra_max``."""
    validate_prime(p)
    params = {"n_max": n_max, "p": p, "extra_max": extra_max, "seed": seed}
    params["extra"] = [[list(a), list(b)] for a, b in extra]
    rep = Report("indecomposable", params)
    with _timed(rep):
        shapes = classification_shapes(n_max, p, extra_max)
        for ab in extra:
            if sort_pair(ab) not in shapes:
                shapes.append(sort_pair(ab))
        work = [(ab, p, seed) for ab in shapes]
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = list(pool.map(_classify_job, work))
        else:
            results = [_classify_job(w) for w in work]
        for res in results:
            ab = res["shape"]
            name = f"M{fmt_pair(ab)}"
            expected = classified_indecomposable(ab, p)
            got = res["indecomposable"]
            if got is None:
                rep.add(name, None, f"undecided: {res['how']}")
                continue
            detail = f"dim {res['dim']}, End dim {res['end_dim']}, {res['how']}"
            rep.add(name, got == expected, detail + ("" if got == expected else f"; expected indecomposable={expected}"))
            if expected and got:
                want = classified_end_dim(ab, p)
                rep.add(f"End {name}", res["end_dim"] == want, f"dim {res['end_dim']}, expected {want}")
                if want == 2:
                    rep.add(f"End {name} = F[x]/(x^2)", res.get("dual_numbers"))
    return rep


# -- signed Kostka statements ---------------------------------------------------------------


def verify_dominance(n: int, p: int, registry: Registry | None = None) -> Report:
    """Labels dominate the shape, diagonal multiplicities are 1, vertices follow the formula."""
    registry = registry or Registry(p)
    rep = Report("dominance", {"n": n, "p": p, "seed": registry.seed})
    with _timed(rep):
        try:
            registry.build(n)
        except re.Unresolved as exc:
            rep.add(f"registry n={n}", None, str(exc))
            return rep
        except AssertionError as exc:
            rep.add(f"registry n={n}", False, str(exc))
            return rep
        rep.add(f"registry n={n}", True, f"{len(labels(n, p))} labels, one fresh summand each")
        label_set = set(labels(n, p))
        for ab in bicompositions(n):
            try:
                parts = registry.decomposition(ab)
                row = registry.kostka_row(ab)
            except re.Unresolved as exc:
                rep.add(f"M{fmt_pair(ab)}", None, str(exc))
                continue
            bad = [L for L, k in row.items() if k and not _dominates(L, ab)]
            rep.add(f"dominance M{fmt_pair(ab)}", not bad, "" if not bad else f"summand Y{fmt_pair(bad[0])}")
            if ab in label_set:
                rep.add(f"diagonal M{fmt_pair(ab)}", row[ab] == 1, f"multiplicity {row[ab]}")
            for S in parts:
                L = registry.match(S, labels(n, p))
                want = vertex_shape(*unscale_label(L, p), p)
                got = re.vertex_shape_of(S)
                rep.add(f"vertex Y{fmt_pair(L)} in M{fmt_pair(ab)}", got == want, f"{got} vs {want}")
    return rep


def _dominates(x, y) -> bool:
    from .combinatorics import dominates

    return dominates(x, y)


def verify_diagonal_spot(shapes, p: int, registry: Registry | None = None) -> Report:
    """Diagonal and vertex checks for individual labels of larger degree."""
    registry = registry or Registry(p)
    rep = Report("diagonal-spot", {"shapes": [list(map(list, s)) for s in shapes], "p": p})
    with _timed(rep):
        for L in shapes:
            try:
                Y = registry.get(L)
            except re.Unresolved as exc:
                rep.add(f"Y{fmt_pair(L)}", None, str(exc))
                continue
            except AssertionError as exc:
                rep.add(f"Y{fmt_pair(L)}", False, str(exc))
                continue
            k = signed_kostka(L, L, registry, method="pairing")
            rep.add(f"diagonal M{fmt_pair(L)}", k == 1, f"multiplicity {k}")
            want = vertex_shape(*unscale_label(L, p), p)
            rep.add(f"vertex Y{fmt_pair(L)}", Y.vertex == want, f"{Y.vertex} vs {want}")
    return rep


def scaled(ab, q: int):
    return scale(q, ab[0]), scale(q, ab[1])


def delta0_empty(ab, label, p: int) -> bool:
    rho = vertex_shape(*unscale_label(label, p), p)
    return all(not dlt[0] for _, dlt in lambda_set(ab, rho))


def verify_scaling(n: int, p: int, registry: Registry | None = None, k_max: int = 1) -> Report:
    """Scaling by p never increases a multiplicity; equality under the delta_0 and lambda(0) conditions."""
    registry = registry or Registry(p)
    rep = Report("scaling", {"n": n, "p": p, "k_max": k_max})
    with _timed(rep):
        for L in labels(n, p):
            lam, mu = unscale_label(L, p)
            for ab in bicompositions(n):
                name = f"M{fmt_pair(ab)}:Y{fmt_pair(L)}"
                try:
                    small = signed_kostka(ab, L, registry, method="pairing")
                    big = signed_kostka(scaled(ab, p), scaled(L, p), registry, method="pairing")
                except re.Unresolved as exc:
                    rep.add(name, None, str(exc))
                    continue
                rep.add(f"{name} inequality", big <= small, f"{big} <= {small}")
                if delta0_empty(ab, L, p):
                    rep.add(f"{name} equality (delta_0 empty)", big == small, f"{big} vs {small}")
                lam0 = padic_expansion(lam, p)[0] if lam else ()
                if not lam0:
                    rep.add(f"{name} equality (lambda(0) empty)", big == small, f"{big} vs {small}")
                if k_max >= 2:
                    rep.add(f"{name} stabilisation k=2", None, "degree too large", skipped=True)
    return rep


def verify_product(
    pi,
    pit,
    phi,
    phit,
    k: int,
    p: int,
    registry: Registry | None = None,
) -> Report:
    """Multiplicities of M(pi + p^k phi | ...) against products of smaller ones.

    Runs over all labels (lambda|p mu) of |pi|+|pit| with ell_p < k and all
    labels (alpha|p beta) of |phi|+|phit|.
    """
    registry = registry or Registry(p)
    rep = Report("product", {"pi": list(pi), "pit": list(pit), "phi": list(phi), "phit": list(phit), "k": k, "p": p})
    with _timed(rep):
        q = p**k
        m, n = sum(pi) + sum(pit), sum(phi) + sum(phit)
        big_shape = (padded_sum(pi, scale(q, phi)), padded_sum(pit, scale(q, phit)))
        equality = q > max([0, *pi, *pit])
        for L1 in labels(m, p):
            lam, mu = unscale_label(L1, p)
            if not k > ell_p(lam, mu, p):
                continue
            for L2 in labels(n, p):
                alpha, beta = unscale_label(L2, p)
                big_label = (padded_sum(lam, scale(q, alpha)), scale(p, padded_sum(mu, scale(q, beta))))
                name = f"M{fmt_pair(big_shape)}:Y{fmt_pair(big_label)}"
                try:
                    left = signed_kostka(big_shape, big_label, registry, method="pairing")
                    r1 = signed_kostka((pi, pit), L1, registry, method="pairing") if m else 1
                    r2 = signed_kostka(scaled((phi, phit), p), scaled(L2, p), registry, method="pairing") if n else 1
                except re.Unresolved as exc:
                    rep.add(name, None, str(exc))
                    continue
                rep.add(f"{name} inequality", left >= r1 * r2, f"{left} >= {r1}*{r2}")
                if equality:
                    rep.add(f"{name} equality", left == r1 * r2, f"{left} vs {r1 * r2}")
    return rep


def strict_inequality_family(m: int, c: int, p: int, registry: Registry | None = None) -> Report:
    """The strict-inequality family: values 1 at degree mp+c and 0 after scaling by p."""
    if not 0 < c < p or m < 1:
        raise ValueError("need m >= 1 and 0 < c < p")
    registry = registry or Registry(p)
    rep = Report("strict-inequality", {"m": m, "c": c, "p": p})
    with _timed(rep):
        ab = ((), (m * p, c))
        L = ((1,) * c, (m * p,))
        try:
            small = signed_kostka(ab, L, registry, method="pairing")
            big = signed_kostka(scaled(ab, p), scaled(L, p), registry, method="pairing")
        except re.Unresolved as exc:
            rep.add("example", None, str(exc))
            return rep
        rep.add(f"[M{fmt_pair(ab)}:Y{fmt_pair(L)}] = 1", small == 1, f"value {small}")
        rep.add(f"[M{fmt_pair(scaled(ab, p))}:Y{fmt_pair(scaled(L, p))}] = 0", big == 0, f"value {big}")
        rep.add("strict inequality", big < small, f"{big} < {small}")
    return rep


def verify_hyperoctahedral(m_max: int, p: int, registry: Registry | None = None) -> Report:
    """Hyperoctahedral multiplicities against symmetric-group projective multiplicities."""
    registry = registry or Registry(p)
    B = BRegistry(registry)
    rep = Report("hyperoctahedral", {"m_max": m_max, "p": p})
    with _timed(rep):
        for m in range(1, m_max + 1):
            for L in restricted_pairs(m, p):
                lam, lam2 = L
                for gd in bicompositions(m):
                    gam, dlt = gd
                    name = f"[V2{fmt_pair(gd)}:Q{fmt_pair(L)}]"
                    try:
                        left = b_multiplicity(gd, L, B)
                    except re.Unresolved as exc:
                        rep.add(name, None, str(exc))
                        continue
                    if lam2:
                        continue
                    if dlt:
                        rep.add(f"{name} = 0", left == 0, f"value {left}")
                    else:
                        right = signed_kostka((gam, ()), (lam, ()), registry, method="pairing")
                        rep.add(f"{name} = [M{fmt_pair((gam, ()))}:P{fmt_pair(L)}]", left == right, f"{left} vs {right}")
            try:
                B.peeling_check(m)
                rep.add(f"peeling rebuild m={m}", True)
            except AssertionError as exc:
                rep.add(f"peeling rebuild m={m}", False, str(exc))
    return rep


# -- labels of indecomposable modules -----------------------------------------------------


def expected_label(ab, p: int):
    """Label of an indecomposable M((m)|(n)) or M(empty|(n))."""
    a, b = sort_pair(ab)
    m = sum(a)
    n = sum(b)
    n0, n1 = n % p, n // p
    return (tuple([m] if m else []) + (1,) * n0, scale(p, (n1,)))


def fixed_count(ab, rho) -> int:
    return sum(lambda_block_size(e) for e in lambda_set(ab, rho))


def identify_label(V: re.Summand, p: int, registry: Registry, claimed) -> tuple[bool, str]:
    """Check V = Y(claimed) for an indecomposable V.

    If the registry copy is buildable within the cap, compare directly.
    Otherwise use that V is a summand of M(L) only for L dominated by the
    label of V: require [M(claimed):V] > 0 and [M(L):V] = 0 for all strictly
    dominating L whose Brauer quotient at the vertex of V is nonzero.
    """
    try:
        Y = registry.get(claimed)
        return re.is_isomorphic(V, Y.summand), f"registry copy of dim {Y.dim}"
    except re.Unresolved:
        pass
    n = pair_size(claimed)
    rho = re.vertex_shape_of(V)
    if rho != vertex_shape(*unscale_label(claimed, p), p):
        return False, f"vertex {rho} does not match"
    if re.multiplicity(registry.module(claimed), V) == 0:
        return False, "not a summand of the claimed permutation module"
    checked = 0
    for L in labels(n, p):
        if L == claimed or not _dominates(L, claimed):
            continue
        M = registry.module(L)
        if M.dim < V.dim or fixed_count(sort_pair(L), rho) == 0:
            continue
        checked += 1
        if re.multiplicity(M, V):
            return False, f"also a summand of M{fmt_pair(L)}"
    return True, f"dominance scan over {checked} permutation modules"


def verify_labels(n_max: int, p: int, registry: Registry | None = None) -> Report:
    registry = registry or Registry(p)
    rep = Report("labels", {"n_max": n_max, "p": p})
    with _timed(rep):
        for n in range(1, n_max + 1):
            shapes = [((), (n,)), ((n,), ())]
            shapes += [((m,), (n - m,)) for m in range(1, n) if n % p == 0]
            for ab in shapes:
                if ab[0] and not ab[1]:
                    L = (ab[0], ())
                else:
                    L = expected_label(ab, p)
                name = f"M{fmt_pair(ab)} = Y{fmt_pair(L)}"
                try:
                    V = re.whole(registry.module(ab))
                    re.certify(V)
                    ok, how = identify_label(V, p, registry, L)
                except re.Unresolved as exc:
                    rep.add(name, None, str(exc))
                    continue
                rep.add(name, ok, how)
    return rep


# -- oracle comparison -----------------------------------------------------------------------


def verify_recursion(n: int, p: int, registry: Registry | None = None) -> Report:
    registry = registry or Registry(p)
    engine = KostkaEngine(registry)
    rep = Report("recursion", {"n": n, "p": p})
    with _timed(rep):
        for ab in bicompositions(n):
            row = registry.kostka_row(ab)
            for L in labels(n, p):
                k = engine.klyachko(ab, L)
                rep.add(f"[M{fmt_pair(ab)}:Y{fmt_pair(L)}]", k == row[L], f"brute {row[L]}, recursion {k}")
    return rep
