"""
Contraction algebras from the dg quiver
=======================================

Removing vertex 0 leaves a line of vertices 1..n with two odd loops whose
differentials are f_0 and f_n.  Degree-zero cohomology is finite
dimensional exactly when the singularity contracts nicely; each corner
e_i H e_j is K[x, y] modulo an ideal computed by Groebner bases.
"""

from lensplumb import GF, build_dg, dim_vector, h0, validate_spec

# the differential and its square
spec = validate_spec([(1, 0, "+"), (0, 1, "+"), (1, 2, "+")])
dg = build_dg(spec)
P = dg.presentation
w = P.path(("b1", "beta", "a1", "alpha"))
print("d w =", dg.d(w))
print("d d w =", dg.d(dg.d(w)))

H = h0(spec)
print(H.dim_vector(), H.total_dimension())
print(H.to_json()["ideals"])

# y +- x^k: the pagoda family has dimension k
for k in range(1, 7):
    print(k, dim_vector(validate_spec([(1, k, "+"), (1, k, "-")])))

# in characteristic 2 the two factors coincide and the algebra is infinite
print(dim_vector(validate_spec([(1, 2, "+"), (1, 2, "-")], field=GF(2))))

print(H.check_structure())
