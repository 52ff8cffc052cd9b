"""
Slopes, cores and lens spaces
=============================

A plumbing is described by a cyclic list of slopes (k, l, sign).  Each
slope gives a factor f_i = y^k + sign * x^l, and neighbouring slopes glue
solid tori into a three-manifold whose type is read off a 2x2 determinant.
"""

from lensplumb import (
    assumptions,
    core_types,
    exceptional_curve_types,
    f_total,
    matching_cycle_type,
    validate_spec,
)
from lensplumb.geometry import SlopeDatum

# three slopes: n = 2, so two exceptional curves
spec = validate_spec([(1, 0, "+"), (0, 1, "+"), (1, 2, "+")])
print("n =", spec.n)
print("f =", f_total(spec))

# core i is glued from slopes i-1 and i
print("cores:", [str(t) for t in core_types(spec)])
print("curves:", exceptional_curve_types(spec))
print(assumptions(spec))

# sweeping the last slope through (1, k) walks through L(k, 1)
for k in range(6):
    print(k, matching_cycle_type(SlopeDatum(1, 0), SlopeDatum(1, k)))

# the sign is part of the vector: (1, 1) against (1, -1) has determinant -2
spec = validate_spec([(1, 1, "+"), (1, 1, "-")])
print([str(t) for t in core_types(spec)])

# parallel slopes give S^1 x S^2 and break assumption C
spec = validate_spec([(1, 1, "+"), (1, 1, "+")])
print([str(t) for t in core_types(spec)], assumptions(spec))

# invalid data is rejected with a code and the offending index
try:
    validate_spec([(1, 0, "+"), (2, 3, "+")])
except ValueError as err:
    print("rejected:", err.code, "at index", err.index)
