"""The dg algebra on the linear quiver and its degree-zero cohomology.

Vertices 1..n carry the arrows a_i, b_i of the linear presentation plus two
loops of degree -1, ``alpha`` at vertex 1 and ``beta`` at vertex n, each
squaring to zero.  The differential kills arrows and sends
``alpha -> t_0 e_1``, ``beta -> t_n e_n``; after t_i -> f_i(x, y) the
cohomology in degree 0 is the path algebra modulo the two-sided ideal
generated by f_0 e_1 and f_n e_n.
"""

import itertools
import math
from dataclasses import dataclass

from .geometry import f_components
from .groebner import INFINITE, IdealBasis, groebner, normal_form, standard_monomials
from .quiver import Element, linear_path, linear_presentation, reduce


class DGAlgebra:
    """A presentation whose odd loops have scalar differentials.

    ``dvals`` maps a loop name to the coefficient c with d(loop) = c * e_v.
    Arrows of degree 0 are cycles.
    """

    def __init__(self, presentation, dvals):
        self.presentation = presentation
        self.dvals = dict(dvals)
        for name in self.dvals:
            a = presentation.quiver.arrows[name]
            if a.source != a.target or a.degree != -1:
                raise ValueError(f"{name} must be a degree -1 loop")

    @property
    def ring(self):
        return self.presentation.ring

    def degree(self, word):
        return self.presentation.degree(word)

    def d(self, x):
        """Leibniz extension with sign (-1)^(odd letters left of the replaced one)."""
        P = self.presentation
        out = {}
        arrows = P.quiver.arrows
        for (t, s, w), c in x.terms.items():
            odd = 0
            for k, letter in enumerate(w):
                if letter in self.dvals:
                    rest = w[:k] + w[k + 1:]
                    coeff = self.dvals[letter] * c
                    if odd % 2:
                        coeff = -coeff
                    key = (t, s, rest)
                    out[key] = out[key] + coeff if key in out else coeff
                if arrows[letter].degree % 2:
                    odd += 1
        return reduce(Element(P, out), P)


def build_dg(spec, ring=None):
    """The base-changed dg algebra: rules a_i b_i -> f_i e_{i+1}, b_i a_i -> f_i e_i,
    loops alpha (vertex 1) and beta (vertex n) with d alpha = f_0 e_1, d beta = f_n e_n."""
    ring = ring or spec.xy_ring()
    f = f_components(spec, ring)
    n = spec.n
    P = linear_presentation(n, ring, f, loops=(("alpha", 1, -1), ("beta", n, -1)))
    return DGAlgebra(P, {"alpha": f[0], "beta": f[n]})


def differential(dg, x):
    return dg.d(x)


# H^0


def _component_ideals(spec, ring=None):
    """J_ij for every vertex pair: e_i H^0 e_j = K[x, y] / J_ij on the monotone path j -> i.

    Start from f_0 at (1, 1) and f_n at (n, n) and saturate under left and right
    multiplication by single arrows until every Groebner basis is stable.
    """
    ring = ring or spec.xy_ring()
    f = f_components(spec, ring)
    n = spec.n
    P = linear_presentation(n, ring, f)
    verts = range(1, n + 1)
    gens = {(i, j): [] for i in verts for j in verts}
    gens[(1, 1)].append(f[0])
    gens[(n, n)].append(f[n])
    bases = {k: groebner(IdealBasis(v)) for k, v in gens.items()}
    arrows = list(P.quiver.arrows.values())
    pending = [(k, g) for k, gs in gens.items() for g in gs]
    while pending:
        (i, j), g = pending.pop()
        elem = Element(P, {(i, j, linear_path(i, j)): g})
        products = []
        for a in arrows:
            if a.source == i:
                products.append(P.arrow(a.name) * elem)
            if a.target == j:
                products.append(elem * P.arrow(a.name))
        for prod in products:
            for (i2, j2, w), c in prod.terms.items():
                if w != linear_path(i2, j2):
                    raise AssertionError(f"non-monotone normal form {w}")
                gb = bases[(i2, j2)]
                if normal_form(c, gb.generators).is_zero():
                    continue
                gens[(i2, j2)].append(c)
                bases[(i2, j2)] = groebner(IdealBasis(gb.generators + (c,)))
                pending.append(((i2, j2), c))
    return P, bases


def expected_component_ideal(spec, i, j, ring=None):
    """Closed form (f_0 f_1 ... f_{min-1}, f_n f_{n-1} ... f_{max}) used to cross-check the saturation."""
    ring = ring or spec.xy_ring()
    f = f_components(spec, ring)
    n = spec.n
    left = f[0]
    for k in range(1, min(i, j)):
        left = left * f[k]
    right = f[n]
    for k in range(max(i, j), n):
        right = right * f[k]
    return IdealBasis((left, right))


@dataclass
class ContractionAlgebra:
    """e_i H^0 e_j = K[x, y] / J_ij times the monotone path, for i, j in 1..n."""

    spec: object
    presentation: object
    ideals: dict

    @property
    def n(self):
        return self.spec.n

    def component_basis(self, i, j):
        std = standard_monomials(self.ideals[(i, j)])
        if std is None:
            return None
        return [(exp, linear_path(i, j)) for exp in std]

    def dim(self, i, j):
        std = standard_monomials(self.ideals[(i, j)])
        return INFINITE if std is None else len(std)

    def dim_vector(self):
        return [[self.dim(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def total_dimension(self):
        return sum(d for row in self.dim_vector() for d in row)

    def is_finite(self):
        return self.total_dimension() != INFINITE

    def element(self, i, j, exp):
        ring = self.presentation.ring
        return {(i, j): ring.monomial(exp)}

    def normalise(self, x):
        out = {}
        for key, c in x.items():
            r = normal_form(c, self.ideals[key].generators)
            if not r.is_zero():
                out[key] = r
        return out

    def multiply(self, x, y):
        """Product of elements given as {(i, j): coefficient of the monotone path j -> i}."""
        P = self.presentation
        out = {}
        for (i, j), c in x.items():
            for (j2, k), c2 in y.items():
                if j != j2:
                    continue
                prod = Element(P, {(i, j, linear_path(i, j)): c}) * Element(P, {(j, k, linear_path(j, k)): c2})
                for (a, b, w), v in prod.terms.items():
                    out[(a, b)] = out[(a, b)] + v if (a, b) in out else v
        return self.normalise(out)

    def basis(self):
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                comp = self.component_basis(i, j)
                if comp is None:
                    return None
                out.extend(self.element(i, j, exp) for exp, _ in comp)
        return out

    def check_structure(self, limit=30, sample=200, rng=None):
        """Closure and associativity of basis products: exhaustive up to ``limit``
        basis elements, otherwise ``sample`` random triples.  Infinite algebras
        are checked on the first few standard monomials only."""
        basis = self.basis()
        if basis is None:
            basis = []
            for i in range(1, self.n + 1):
                for j in range(1, self.n + 1):
                    for exp in self.presentation.ring.monomials_below(3):
                        x = self.normalise(self.element(i, j, exp))
                        if x:
                            basis.append(x)
        closure = True
        for u in basis:
            for v in basis:
                for (i, j), c in self.multiply(u, v).items():
                    std = standard_monomials(self.ideals[(i, j)])
                    if std is not None and not set(c.terms) <= set(std):
                        closure = False
        if len(basis) <= limit:
            triples = itertools.product(basis, repeat=3)
        else:
            import random

            rng = rng or random.Random(0)
            triples = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(sample)]
        assoc = all(
            self.multiply(self.multiply(u, v), w) == self.multiply(u, self.multiply(v, w))
            for u, v, w in triples
        )
        return {"closure": closure, "associative": assoc}

    def to_json(self):
        dims = self.dim_vector()
        total = self.total_dimension()
        return {
            "dim_vector": [[_jsonable(d) for d in row] for row in dims],
            "total_dimension": _jsonable(total),
            "ideals": {
                f"{i},{j}": [str(g) for g in self.ideals[(i, j)].generators]
                for i in range(1, self.n + 1)
                for j in range(1, self.n + 1)
            },
            "bases": {
                f"{i},{j}": None
                if self.component_basis(i, j) is None
                else [_mono_str(exp) for exp, _ in self.component_basis(i, j)]
                for i in range(1, self.n + 1)
                for j in range(1, self.n + 1)
            },
        }


def _jsonable(d):
    return "infinite" if d == INFINITE else d


def _mono_str(exp):
    x, y = exp
    parts = [p for p in (_pow("x", x), _pow("y", y)) if p]
    return "*".join(parts) or "1"


def _pow(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def h0(spec):
    P, ideals = _component_ideals(spec)
    return ContractionAlgebra(spec, P, ideals)


def dim_vector(spec):
    return h0(spec).dim_vector()


def is_infinite(d):
    return d == INFINITE or (isinstance(d, float) and math.isinf(d))
