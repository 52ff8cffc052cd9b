"""Localising away vertex 0 and the torsion of the units z1, z2.

Removing vertex 0 from the Fukaya presentation adds two odd loops ``eps0``
(vertex 1) and ``epsn`` (vertex n) with d eps0 = f_0(z) theta^1 and
d epsn = f_n(z) theta^n.  In degree-zero cohomology this forces
f_0(z1, z2) = f_n(z1, z2) = 0, two binomial relations between the units.

The subgroup generated by z1, z2 and -1 is then Z^3 modulo the rows
``(l, -k, s)`` for the two end slopes (``s = 1`` when the slope sign is +,
since the relation reads z1^l z2^-k = -sign) and ``(0, 0, 2)`` for the sign
(``(0, 0, 1)`` in characteristic 2).  If the sign generator itself dies in
characteristic != 2 then 1 = -1 forces the ring to vanish; the report says
``collapsed`` and every order is 1.
"""

from dataclasses import dataclass

from .dg import DGAlgebra
from .fukaya import z_ring
from .geometry import assumptions, f_component, f_components
from .groebner import IdealBasis, contains, groebner
from .lattice import element_order, in_row_span
from .poly import PolyRing
from .quiver import linear_presentation


def build_localized(spec):
    """Vertices 1..n of the Fukaya quiver with loops eps0, epsn of degree -1."""
    R = z_ring(spec.field)
    f = f_components(spec, R)
    n = spec.n
    P = linear_presentation(
        n, R, f, forward="eta", backward="delta", loops=(("eps0", 1, -1), ("epsn", n, -1))
    )
    return DGAlgebra(P, {"eps0": f[0], "epsn": f[n]})


def unit_relations(spec):
    """The two Laurent relations f_0(z1, z2) = 0 and f_n(z1, z2) = 0."""
    R = z_ring(spec.field)
    return f_component(spec.slopes[0], R), f_component(spec.slopes[-1], R)


def relation_lattice(spec):
    rows = []
    for d in (spec.slopes[0], spec.slopes[-1]):
        rows.append([d.l, -d.k, 1 if d.sign > 0 else 0])
    rows.append([0, 0, 1 if spec.field.characteristic == 2 else 2])
    return rows


@dataclass(frozen=True)
class TorsionReport:
    z1: object  # int order or None for non-torsion
    z2: object
    collapsed: bool
    lattice: tuple
    relations: tuple

    @property
    def finite(self):
        return self.z1 is not None and self.z2 is not None

    def to_json(self):
        return {
            "z1": "non-torsion" if self.z1 is None else self.z1,
            "z2": "non-torsion" if self.z2 is None else self.z2,
            "collapsed": self.collapsed,
            "finite": self.finite,
            "lattice": [list(r) for r in self.lattice],
            "relations": list(self.relations),
            "note": "orders are taken in the group generated by z1, z2 and -1",
        }


def torsion_orders(spec):
    M = relation_lattice(spec)
    rels = tuple(f"{g} = 0" for g in unit_relations(spec))
    if spec.field.characteristic != 2 and in_row_span(M, [0, 0, 1]):
        return TorsionReport(1, 1, True, tuple(map(tuple, M)), rels)
    return TorsionReport(
        element_order(M, [1, 0, 0]),
        element_order(M, [0, 1, 0]),
        False,
        tuple(map(tuple, M)),
        rels,
    )


def case_analysis_orders(spec):
    """Orders from eliminating one unit, as in the direct argument.

    When l_0 = 1, z1 = -s_0 z2^{k_0} and the second relation becomes
    z2^D = eps with D = k_n - k_0 l_n, eps = -s_n (-s_0)^{l_n}.  When k_0 = 1
    the roles of z1 and z2 swap.  Returns ``(ord z1, ord z2, collapsed)`` with
    None for non-torsion, or None when neither case applies.
    """
    s0, sn = spec.slopes[0], spec.slopes[-1]
    char2 = spec.field.characteristic == 2
    if s0.l == 1:
        D = sn.k - s0.k * sn.l
        eps = -sn.sign * (-s0.sign) ** sn.l
        other = (s0.k, -s0.sign)  # the eliminated unit is (-s_0) * gen^{k_0}
        swap = False
    elif s0.k == 1:
        D = s0.l * sn.k - sn.l
        eps = -sn.sign * (-s0.sign) ** sn.k
        other = (s0.l, -s0.sign)
        swap = True
    else:
        return None
    if char2:
        eps = 1
    sign_mod = 1 if char2 else 2
    if D == 0:
        if eps == -1:
            return 1, 1, True
        # the free unit has infinite order; the other is +-1 only if its exponent is 0
        elim = None
        if other[0] == 0:
            elim = 1 if char2 or other[1] == 1 else 2
        return (None, elim, False) if swap else (elim, None, False)

    def order(exp, sign):
        # smallest m with (m*exp, m*[sign=-1]) in span{(D, [eps=-1]), (0, sign_mod)}
        bit = 0 if sign == 1 else 1
        ebit = 0 if eps == 1 else 1
        for m in range(1, 2 * abs(D) + 1):
            if (m * exp) % D:
                continue
            t = m * exp // D
            if (m * bit - t * ebit) % sign_mod == 0:
                return m
        raise AssertionError("order exceeds the proof bound")

    gen = order(1, 1)
    elim = order(*other)
    if swap:
        return gen, elim, False
    return elim, gen, False


def proof_bound(spec):
    """In the l_0 = 1 case, ord(z2) divides 2|k_n - k_0 l_n|; symmetric for k_0 = 1."""
    s0, sn = spec.slopes[0], spec.slopes[-1]
    if s0.l == 1:
        return "z2", 2 * abs(sn.k - s0.k * sn.l)
    if s0.k == 1:
        return "z1", 2 * abs(s0.l * sn.k - sn.l)
    return None


def _prime_factors(m):
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def groebner_order_check(spec, report=None):
    """Confirm the orders inside K[z1, z2, w1, w2] / (f_0, f_n, z1 w1 - 1, z2 w2 - 1).

    For a finite order m: z^m - 1 lies in the ideal and z^(m/p) - 1 does not
    for any prime p | m.  A collapsed report must have 1 in the ideal.
    """
    report = report or torsion_orders(spec)
    R = PolyRing(spec.field, ("z1", "z2", "w1", "w2"))
    z1, z2, w1, w2 = R.gens()
    gens = [f_component(d, R) for d in (spec.slopes[0], spec.slopes[-1])]
    gens += [z1 * w1 - 1, z2 * w2 - 1]
    gb = groebner(IdealBasis(gens))
    out = {}
    if report.collapsed:
        out["unit_ideal"] = contains(gb, R.one)
        return out
    for name, z, m in (("z1", z1, report.z1), ("z2", z2, report.z2)):
        if m is None:
            out[name] = not any(contains(gb, z ** k - 1) for k in range(1, 9))
            continue
        ok = contains(gb, z ** m - 1)
        ok = ok and not any(contains(gb, z ** (m // p) - 1) for p in _prime_factors(m))
        out[name] = ok
    return out


def torsion_matches_assumption(spec):
    return torsion_orders(spec).finite == assumptions(spec).B
