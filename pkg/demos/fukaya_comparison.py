"""
The Fukaya-side presentation and its comparison map
===================================================

The same quiver over Laurent polynomials in z1, z2, with delta_i eta_i =
f_i(z1, z2).  Winding loops x_r at a vertex multiply like powers of a
variable, except that x_-1 x_1 gives the whole polynomial f.

The map psi sends z1 -> x - 1 and z2 -> y - 1 into power series truncated at
degree N, and is checked block by block.
"""

from lensplumb import endomorphism_ring_check, validate_spec, verify_psi_iso
from lensplumb.fukaya import build_fukaya_presentation, psi, psi_target, winding_element

spec = validate_spec([(1, 1, "+"), (1, 1, "-")])
F = build_fukaya_presentation(spec)

x = {r: winding_element(F, 0, r) for r in (-1, 1, 2)}
print("x_-1 x_1 =", x[-1] * x[1])
print("x_1 x_1 == x_2:", x[1] * x[1] == x[2])
print(endomorphism_ring_check(spec, 0, 3).to_json()["passed"])

# z1^-1 becomes a truncated geometric series
T = psi_target(spec, 5)
print(psi(F.z(1, 0, -1), T))

# relations die, every block is unitriangular
rep = verify_psi_iso(spec, 2, 6)
print(rep["relations"].passed, rep["blocks"].passed, rep["blocks"].checked)

# without the shift the relations survive
for r in rep["literal_residuals"]:
    print(r["relation"], "->", r["image"])
