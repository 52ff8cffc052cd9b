"""
Affine braids acting on a free group
====================================

The n+1 punctures c_0..c_n sit around the hole of an annulus.  Half twists
sigma_1..sigma_n and the rotation rho act on the free group generated by
the loop h around the hole and loops g_i around the punctures; sigma_0 is
conjugated into place by rho.
"""

from lensplumb.braid import (
    apply,
    boundary_check,
    g_gen,
    nontriviality_sample,
    rho_auto,
    sigma_auto,
    verify_presentation,
)

n = 3
g0, g1 = g_gen(0), g_gen(1)

# sigma_1 swaps c_0 and c_1
print(apply([(1, 1)], (g0,), n), apply([(1, 1)], (g1,), n))

rho = rho_auto(n)
print(rho * sigma_auto(2, n) * rho.inverse() == sigma_auto(3, n))

rep = verify_presentation(n)
print(rep["passed"], [(r["i"], r["j"]) for r in rep["far_commutation"]])

# with two punctures the cyclic braid relation is not part of the group
print(verify_presentation(1)["braid"])

print(boundary_check(n)["sigma0"])

# squares of half twists generate a right-angled Artin group; none of its
# nontrivial elements acts trivially
print(nontriviality_sample(n, 8, 300, seed=1))
