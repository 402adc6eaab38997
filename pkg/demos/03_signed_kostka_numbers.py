"""
Signed p-Kostka numbers
=======================

Each indecomposable summand of a signed permutation module is a signed
Young module Y(lambda|p mu).  The registry builds one reference copy per
label, peeling off summands already explained by more dominant labels.
Multiplicities then come from the rank of the Hom composition pairing,
without decomposing the ambient module at all.
"""

from signed_kostka.combinatorics import bicompositions, fmt_pair, labels
from signed_kostka.registry import KostkaEngine, Registry, k_table, signed_kostka

p = 3
R = Registry(p)

print("labels of degree 4, most dominant first:")
for L in labels(4, p):
    E = R.get(L)
    print(f"  Y{fmt_pair(L):<14} dim {E.dim:>3}  vertex {E.vertex}")

# brute force and the orbit-type recursion fill the same table
table = k_table(4, p, R, method="both")
print()
print("nonzero entries of the degree-4 table:")
for ab in bicompositions(4):
    row = {L: k for (ab2, L), k in table.items() if ab2 == ab and k}
    print(f"  M{fmt_pair(ab):<14}", ", ".join(f"{k}·Y{fmt_pair(L)}" for L, k in row.items()))

# scaling everything by p can make a multiplicity drop
small = signed_kostka(((), (3, 1)), ((1,), (3,)), R, method="pairing")
big = signed_kostka(((), (9, 3)), ((3,), (9,)), R, method="pairing")
print()
print(f"[M(∅|(3,1)) : Y((1)|(3))] = {small}")
print(f"[M(∅|(9,3)) : Y((3)|(9))] = {big}")

engine = KostkaEngine(R)
print("recursion for [M((3,1)|∅) : Y((4)|∅)]:", engine.klyachko(((3, 1), ()), ((4,), ())))
