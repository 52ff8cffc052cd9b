"""
Torsion of the units after localisation
=======================================

Inverting away vertex 0 imposes f_0(z1, z2) = f_n(z1, z2) = 0.  Both are
binomials, so the orders of z1 and z2 come from a Smith normal form over
the integers.
"""

from lensplumb import GF, torsion_orders, unit_relations, validate_spec
from lensplumb.geometry import assumptions
from lensplumb.lattice import smith_normal_form
from lensplumb.localization import case_analysis_orders, groebner_order_check, relation_lattice

spec = validate_spec([(1, 1, "+"), (0, 1, "+"), (2, 1, "+")])
print(unit_relations(spec))

M = relation_lattice(spec)
U, D, V = smith_normal_form(M)
print("lattice", M, "diagonal", [D[i][i] for i in range(3)])

rep = torsion_orders(spec)
print(rep.to_json())
print("by elimination:", case_analysis_orders(spec))
print("inside the ring:", groebner_order_check(spec, rep))

# equal end slopes: nothing is torsion, matching the failure of B
spec = validate_spec([(1, 1, "+"), (0, 1, "+"), (1, 1, "+")])
print(torsion_orders(spec).finite, assumptions(spec).B)

# z1 = -z2 and z1 = z2 make -1 = 1
print(torsion_orders(validate_spec([(1, 1, "+"), (1, 1, "-")])).collapsed)
print(torsion_orders(validate_spec([(1, 1, "+"), (1, 1, "-")], field=GF(2))).to_json())
