"""
Decomposing signed permutation modules
======================================

Summands are split off with random endomorphisms: the primary components
of a random element of End(M) give orthogonal idempotents.  When no split
appears, the endomorphism algebra is certified local, which proves the
summand indecomposable.
"""

import time

from signed_kostka.combinatorics import bicompositions, fmt_pair
from signed_kostka.rep_engine import decompose, end_dimension, signed_young_rep, vertex_shape_of
from signed_kostka.verify import classified_indecomposable, classify_module

p = 3

M = signed_young_rep(((2, 1), (6,)), p)
t0 = time.perf_counter()
parts = decompose(M, seed=0)
print(f"M((2,1)|(6)) has dimension {M.dim} and {len(parts)} summands ({time.perf_counter() - t0:.2f}s)")
for S in parts:
    print(f"  dim {S.dim:>4}  End dim {S.end_dim}  vertex {vertex_shape_of(S)}  {S.status}")

# Which modules are indecomposable?  Compare with the closed classification.
print()
print(f"{'shape':<18}{'dim':>6}{'End':>6}  indecomposable  predicted")
for n in range(1, 6):
    for ab in bicompositions(n):
        res = classify_module(ab, p)
        want = classified_indecomposable(ab, p)
        mark = "" if res["indecomposable"] == want else "  <-- mismatch"
        if res["indecomposable"] or want:
            print(f"{fmt_pair(ab):<18}{res['dim']:>6}{res['end_dim']:>6}  {str(res['indecomposable']):<15} {want}{mark}")

# End dimensions grow quickly; the regular module of S_6 has End of dimension 720
print()
print("End dim of M((1^6)|∅):", end_dimension(signed_young_rep(((1,) * 6, ()), p)))
