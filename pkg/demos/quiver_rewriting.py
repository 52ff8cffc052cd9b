"""
Rewriting in the cyclic quiver algebra
======================================

Vertices 0..n sit on a circle with arrows a_i: i -> i+1 and b_i back.  The
rules a_i b_i -> t_i e_{i+1} and b_i a_i -> t_i e_i turn every path into a
monotone walk times a polynomial in the t's.  Words are written right to
left, so ("a0", "b0") means b0 first.
"""

import random

from lensplumb import base_change, build_cyclic_presentation, reduce, validate_spec
from lensplumb.quiver import basis, cyclic_path, random_element

P = build_cyclic_presentation(2)
t0, t1, t2 = P.ring.gens()

# a0 b0 a0 collapses whichever redex goes first
print(P.path(("a0", "b0", "a0")))

# a full backward loop after a full forward loop gives t0 t1 t2
fwd = P.path(cyclic_path(2, 0, 0, 1), 0)
back = P.path(cyclic_path(2, 0, 0, -1), 0)
print(back * fwd)

# normal paths from a vertex to itself: one per winding number
for w, _ in basis(P, 0, 0, winding_bound=2):
    print(w or "e0")

# random redex choice never changes the normal form
rng = random.Random(0)
x = random_element(P, rng, nterms=4, max_len=8)
print(all(reduce(x, rng=random.Random(k)) == reduce(x) for k in range(50)))

# t_i -> f_i(x, y)
spec = validate_spec([(1, 0, "+"), (0, 1, "+"), (1, 2, "+")])
B = base_change(P, spec)
print(B.rules[("a0", "b0")])
