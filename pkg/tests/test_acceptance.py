"""Acceptance criteria 1-11; each test records one PASS/FAIL line."""

import time

from signed_kostka import verify as vf
from signed_kostka.combinatorics import RhoShape
from signed_kostka.registry import Registry, klyachko_kostka, signed_kostka
from signed_kostka.sylow import sylow_generators
from signed_kostka.tabloids import Tabloid, fixed_tabloids, perm_from_cycles

from test_properties import (
    SEED_SHAPES,
    block_size_failures,
    brauer_additivity_failures,
    hom_agreement_failures,
    seed_stability_failures,
)


def summary(rep):
    return f"{rep.count(vf.PASS)} checks, {len(rep.violations)} violations, {len(rep.unresolved)} unresolved"


def test_c01_fixed_tabloid_bases(criterion):
    t0 = time.perf_counter()
    shape = ((2, 1), (6,))
    Q2 = sylow_generators(RhoShape((3, 2), 3))
    Q1 = [perm_from_cycles([(1, 2, 3)], 9), *Q2.generators]
    beta = (4, 5, 6, 7, 8, 9)
    want = {Tabloid(shape, (a, b, beta)) for a, b in [((1, 2), (3,)), ((1, 3), (2,)), ((2, 3), (1,))]}
    got2 = fixed_tabloids(shape, Q2.generators)
    got1 = fixed_tabloids(shape, Q1)
    dt = time.perf_counter() - t0
    ok = set(got2) == want and len(got2) == 3 and got1 == [] and dt < 1
    assert criterion(1, ok, f"{len(got2)} fixed under Q2, {len(got1)} under Q1, {dt:.2f}s")


def test_c02_indecomposable_classification(criterion):
    t0 = time.perf_counter()
    rep = vf.verify_indecomposable(6, 3, extra=[((5, 1), ()), ((), (5, 1))], extra_max=9)
    dt = time.perf_counter() - t0
    ok = rep.ok and dt < 600
    assert criterion(2, ok, f"{summary(rep)}, {dt:.1f}s")


def test_c03_summand_labels_and_vertices(criterion, reg3):
    t0 = time.perf_counter()
    reps = [vf.verify_dominance(n, 3, reg3) for n in range(1, 6)]
    spot = [((6,), ()), ((3, 3), ()), ((2, 1), (3,)), ((1, 1, 1), (3,)), ((), (6,)), ((4, 2), ()), ((3,), (3,))]
    reps.append(vf.verify_diagonal_spot(spot, 3, reg3))
    dt = time.perf_counter() - t0
    ok = all(r.ok for r in reps) and dt < 900
    n = sum(r.count(vf.PASS) for r in reps)
    assert criterion(3, ok, f"{n} checks over n <= 5 plus {len(spot)} labels at n = 6, {dt:.1f}s")


def test_c04_labels(criterion, reg3):
    rep = vf.verify_labels(9, 3, reg3)
    assert criterion(4, rep.ok, f"{summary(rep)}, {rep.seconds:.1f}s")


def test_c05_strict_inequality_example(criterion, reg3):
    t0 = time.perf_counter()
    rep = vf.strict_inequality_family(1, 1, 3, reg3)
    dims = (reg3.module(((), (3, 1))).dim, reg3.module(((), (9, 3))).dim)
    dt = time.perf_counter() - t0
    ok = rep.ok and dims == (4, 220) and dt < 300
    assert criterion(5, ok, f"values {[c.detail for c in rep.checks[:2]]}, ambient dims {dims}, {dt:.1f}s")


def test_c06_scaling_inequality(criterion, reg3):
    rep = vf.verify_scaling(2, 3, reg3)
    eq = sum(1 for c in rep.checks if "equality (" in c.name)
    ok = rep.ok and eq > 0 and any("inequality" in c.name for c in rep.checks)
    assert criterion(6, ok, f"{summary(rep)} ({eq} equality checks)")


def test_c07_recursion_matches_brute_force(criterion, reg3):
    reps = [vf.verify_recursion(n, 3, reg3) for n in range(1, 6)]
    a = klyachko_kostka(((3, 1), ()), ((4,), ()), reg3)
    b = klyachko_kostka(((2, 2), ()), ((4,), ()), reg3)
    a2 = signed_kostka(((3, 1), ()), ((4,), ()), reg3)
    b2 = signed_kostka(((2, 2), ()), ((4,), ()), reg3)
    ok = all(r.ok for r in reps) and (a, b) == (a2, b2) == (1, 0)
    n = sum(r.count(vf.PASS) for r in reps)
    assert criterion(7, ok, f"{n} table entries agree; instances {a}, {b}")


def test_c08_hyperoctahedral_identities(criterion, reg3):
    rep = vf.verify_hyperoctahedral(3, 3, reg3)
    assert criterion(8, rep.ok, summary(rep))


def test_c09_product_formula(criterion, reg3):
    rep1 = vf.verify_product((1,), (), (1,), (), 1, 3, reg3)
    rep2 = vf.verify_product((1, 1), (), (1,), (), 1, 3, reg3)
    value = signed_kostka(((4,), ()), ((4,), ()), reg3, method="pairing")
    ok = rep1.ok and rep2.ok and value == 1 and rep1.count(vf.PASS) > 0 and rep2.count(vf.PASS) > 0
    assert criterion(9, ok, f"instance value {value}; pi=(1): {summary(rep1)}; pi=(1,1): {summary(rep2)}")


def test_c10_property_suites(criterion):
    fails = {
        "brauer": brauer_additivity_failures(50, seed=7),
        "seeds": seed_stability_failures(SEED_SHAPES[:3]),
        "hom": hom_agreement_failures(3),
        "blocks": block_size_failures(5),
    }
    ok = not any(fails.values())
    assert criterion(10, ok, ", ".join(f"{k} {len(v)} failures" for k, v in fails.items()))


def test_c11_p5_smoke(criterion):
    a = vf.classify_module(((4, 1), ()), 5)
    b = vf.classify_module(((2,), (3,)), 5)
    R = Registry(5)
    sizes = [len(R.build(n)) for n in range(1, 5)]
    ok = a["indecomposable"] and a["end_dim"] == 2 and a.get("dual_numbers") and b["indecomposable"]
    assert criterion(11, ok, f"M((4,1)|∅) End dim {a['end_dim']}, M((2)|(3)) indecomposable, registry sizes {sizes}")
