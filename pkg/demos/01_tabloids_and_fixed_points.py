"""
Signed tabloids and their fixed points
======================================

A signed Young permutation module M(alpha|beta) has a basis of tabloids:
row-equivalence classes of fillings, where reordering inside a beta-row
costs the sign of the reordering.  Restricted to a p-subgroup, the module
is monomial, and its Brauer quotient is spanned by the fixed tabloids.
"""

from signed_kostka.combinatorics import RhoShape, lambda_set, lambda_block_size
from signed_kostka.rep_engine import brauer_quotient_dim, signed_young_rep, whole
from signed_kostka.sylow import sylow_generators
from signed_kostka.tabloids import Tabloid, TabloidBasis, act, fixed_tabloids, perm_from_cycles, rho_type

shape = ((2, 1), (6,))
basis = TabloidBasis(shape)
print("tabloids of shape", shape, ":", basis.size)

# the transposition (2 3) swaps two alpha-rows; (4 5) reorders the beta-row
v = Tabloid(shape, ((1, 3), (2,), (4, 5, 6, 7, 8, 9)))
g = perm_from_cycles([(2, 3), (4, 5)], 9)
sign, u = act(g, v)
print(f"(23)(45) {v} = {'+' if sign > 0 else '-'}{u}")

# the Sylow subgroup of a Young subgroup attached to rho = (1,1,1,3,3)
rho = RhoShape((3, 2), 3)
Q = sylow_generators(rho)
print("generators of P_rho:", Q.generators)

fixed = fixed_tabloids(shape, Q.generators)
for t in fixed:
    print("  fixed:", t, " type", rho_type(t, rho))

# adding (1 2 3) kills every fixed point: 1, 2, 3 never share a row
print("fixed by the larger group:", fixed_tabloids(shape, [perm_from_cycles([(1, 2, 3)], 9), *Q.generators]))

# the fixed tabloids split into blocks indexed by orbit types
for entry in lambda_set(shape, rho):
    print("  block", entry, "of size", lambda_block_size(entry))

M = whole(signed_young_rep(shape, 3))
print("Brauer quotient dimension:", brauer_quotient_dim(M, Q))
