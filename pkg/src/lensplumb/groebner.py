"""Buchberger's algorithm (grlex) and standard-monomial counts.

Sized for ideals in two to four variables with small degrees; it is the
oracle behind every contraction-algebra dimension in this package.
"""

import itertools
import math
from dataclasses import dataclass

from .poly import grlex_key

INFINITE = math.inf


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal; ``reduced`` marks a reduced Groebner basis."""

    generators: tuple
    order: str = "grlex"
    reduced: bool = False

    def __post_init__(self):
        if self.order != "grlex":
            raise ValueError("only the graded-lex order is supported")
        object.__setattr__(self, "generators", tuple(self.generators))

    @property
    def ring(self):
        return self.generators[0].ring if self.generators else None

    def is_zero_ideal(self):
        return all(g.is_zero() for g in self.generators)

    def __str__(self):
        if self.is_zero_ideal():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(f, basis):
    """Remainder of ``f`` on division by ``basis`` (full reduction, grlex)."""
    ring = f.ring
    field = ring.field
    leads = []
    for g in basis:
        if g.is_zero():
            continue
        exp, c = g.leading_term()
        leads.append((exp, field.inv(c), g))
    rem = {}
    work = dict(f.terms)
    while work:
        exp = max(work, key=grlex_key)
        c = work[exp]
        for lexp, linv, g in leads:
            if _divides(lexp, exp):
                shift = tuple(a - b for a, b in zip(exp, lexp))
                factor = field.mul(c, linv)
                for gexp, gc in g.terms.items():
                    e = tuple(a + b for a, b in zip(gexp, shift))
                    s = field.add(work.get(e, field.zero), field.neg(field.mul(factor, gc)))
                    if s == 0:
                        work.pop(e, None)
                    else:
                        work[e] = s
                break
        else:
            rem[exp] = c
            del work[exp]
    return ring.from_dict(rem)


def _s_poly(f, g):
    field = f.ring.field
    (ef, cf), (eg, cg) = f.leading_term(), g.leading_term()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = f.ring.monomial(tuple(a - b for a, b in zip(lcm, ef)), field.inv(cf))
    mg = g.ring.monomial(tuple(a - b for a, b in zip(lcm, eg)), field.inv(cg))
    return mf * f - mg * g


def _reduce_basis(basis):
    basis = [g.monic() for g in basis if not g.is_zero()]
    # drop elements whose leading monomial is divisible by another one
    minimal = []
    for i, g in enumerate(basis):
        lg = g.leading_term()[0]
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            lh = h.leading_term()[0]
            if _divides(lh, lg) and (lh != lg or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead_exp, lead_c = g.leading_term()
        tail = g - g.ring.monomial(lead_exp, lead_c)
        out.append((g.ring.monomial(lead_exp, lead_c) + normal_form(tail, others)).monic())
    out.sort(key=lambda p: grlex_key(p.leading_term()[0]), reverse=True)
    return out


def groebner(ideal):
    """Reduced Groebner basis of ``ideal`` under grlex, as a new IdealBasis.

    The zero ideal has the empty reduced basis.  The output is unique for the
    ideal, so it does not depend on the order the generators were given in.
    """
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(tuple(ideal))
    gens = [g for g in ideal.generators if not g.is_zero()]
    if not gens:
        return IdealBasis((), reduced=True)
    if any(g.ring.laurent or g.ring.order is not None for g in gens):
        raise ValueError("groebner works over polynomial rings only")
    basis = list(gens)
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        li, lj = basis[i].leading_term()[0], basis[j].leading_term()[0]
        # Buchberger's first criterion: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        r = normal_form(_s_poly(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r)
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    return IdealBasis(tuple(_reduce_basis(basis)), reduced=True)


def ideal_equal(a, b):
    return groebner(a).generators == groebner(b).generators


def contains(ideal, f):
    gb = ideal if isinstance(ideal, IdealBasis) and ideal.reduced else groebner(ideal)
    return normal_form(f, gb.generators).is_zero()


def _pure_power_bounds(leads, nvars):
    bounds = []
    for v in range(nvars):
        best = None
        for exp in leads:
            if all(e == 0 for k, e in enumerate(exp) if k != v):
                best = exp[v] if best is None else min(best, exp[v])
        bounds.append(best)
    return bounds


def standard_monomials(ideal, nvars=None):
    """Exponents outside the leading-term ideal, or ``None`` if infinitely many."""
    gb = ideal if isinstance(ideal, IdealBasis) and ideal.reduced else groebner(ideal)
    if not gb.generators:
        return None
    nvars = gb.ring.nvars
    leads = [g.leading_term()[0] for g in gb.generators]
    bounds = _pure_power_bounds(leads, nvars)
    if any(b is None for b in bounds):
        return None
    out = []
    for exp in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(l, exp) for l in leads):
            out.append(exp)
    out.sort(key=grlex_key)
    return out


def quotient_dimension(ideal):
    """dim_K of K[vars]/I: the number of standard monomials, or INFINITE."""
    std = standard_monomials(ideal)
    if std is None:
        return INFINITE
    return len(std)
