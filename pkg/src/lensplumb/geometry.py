"""Slope data, the polynomial f, and the topology it determines.

A slope ``(k, l, sign)`` stands for the vanishing cycle ``k*a + sign*l*b`` on
the torus fibre and for the factor ``f_i(x, y) = y^k + sign * x^l``.  The
cores Q_i are genus-one Heegaard splittings glued along consecutive slopes,
so they are S^3, S^1 x S^2, or lens spaces.
"""

import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .field import QQ, field_from_json
from .poly import PolyRing


class SpecError(ValueError):
    """Invalid plumbing data.  ``code`` is a stable machine-readable tag."""

    def __init__(self, code, message, index=None):
        super().__init__(message)
        self.code = code
        self.index = index


@dataclass(frozen=True)
class SlopeDatum:
    k: int
    l: int
    sign: int = 1

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise SpecError("negative", f"slope ({self.k}, {self.l}) has a negative entry")
        if self.sign not in (1, -1):
            raise SpecError("sign", f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def vector(self):
        return (self.k, self.sign * self.l)

    def satisfies_kl(self):
        return self.k == 1 or self.l == 1

    def __str__(self):
        return f"({self.k},{'+' if self.sign > 0 else '-'}{self.l})"

    def to_json(self):
        return {"k": self.k, "l": self.l, "sign": "+" if self.sign > 0 else "-"}


@dataclass(frozen=True)
class Truncation:
    poly_degree: int = 6
    winding: int = 2


@dataclass(frozen=True)
class PlumbingSpec:
    slopes: tuple
    field: object = QQ
    truncation: Truncation = dc_field(default_factory=Truncation)

    @property
    def n(self):
        return len(self.slopes) - 1

    def xy_ring(self):
        return PolyRing(self.field, ("x", "y"))


def _parse_sign(s):
    if s in ("+", 1, "+1"):
        return 1
    if s in ("-", -1, "-1"):
        return -1
    raise SpecError("sign", f"cannot read sign {s!r}")


def _parse_slope(raw):
    if isinstance(raw, SlopeDatum):
        return raw
    if isinstance(raw, dict):
        return SlopeDatum(int(raw["k"]), int(raw["l"]), _parse_sign(raw.get("sign", "+")))
    k, l, *rest = raw
    return SlopeDatum(int(k), int(l), _parse_sign(rest[0]) if rest else 1)


def validate_spec(raw, field=None, truncation=None):
    """Turn a slope list into a PlumbingSpec, or raise SpecError.

    ``raw`` may be a sequence of ``(k, l, sign)`` triples / dicts, or a dict
    with keys ``slopes``, ``field`` and ``truncation`` as in the JSON spec file.
    """
    if isinstance(raw, dict):
        field = field if field is not None else field_from_json(raw.get("field"))
        t = raw.get("truncation") or {}
        truncation = truncation or Truncation(
            int(t.get("poly_degree", 6)), int(t.get("winding", 2))
        )
        raw = raw.get("slopes")
    if not raw:
        raise SpecError("empty", "slope list is empty")
    slopes = tuple(_parse_slope(s) for s in raw)
    for i, s in enumerate(slopes):
        if not s.satisfies_kl():
            raise SpecError(
                "k-or-l-one",
                f"slope {s} at index {i} violates the condition k = 1 or l = 1",
                index=i,
            )
    if len(slopes) < 2:
        raise SpecError("n-zero", "need at least two slopes (n >= 1)")
    return PlumbingSpec(slopes, field or QQ, truncation or Truncation())


def f_component(d, ring):
    """``y^k + sign * x^l`` in ``ring``; the first two variables play x and y."""
    x_exp = [0] * ring.nvars
    y_exp = [0] * ring.nvars
    x_exp[0] = d.l
    y_exp[1] = d.k
    return ring.monomial(y_exp) + ring.monomial(x_exp, d.sign)


def f_components(spec, ring=None):
    ring = ring or spec.xy_ring()
    return [f_component(s, ring) for s in spec.slopes]


def f_total(spec, ring=None):
    ring = ring or spec.xy_ring()
    out = ring.one
    for g in f_components(spec, ring):
        out = out * g
    return out


# three-manifolds


@dataclass(frozen=True)
class ThreeManifoldType:
    kind: str  # "S3", "S1xS2" or "lens"
    p: int = 0
    q: int = 0

    def __str__(self):
        if self.kind == "lens":
            return f"L({self.p},{self.q})"
        return {"S3": "S^3", "S1xS2": "S^1xS^2"}[self.kind]


SPHERE = ThreeManifoldType("S3", 1, 0)
S1XS2 = ThreeManifoldType("S1xS2", 0, 1)


def Lens(p, q):
    return ThreeManifoldType("lens", p, q)


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _complete_basis(s):
    """Some t with det(s, t) = 1, from the extended Euclidean algorithm."""
    a, b = s
    g, u, v = _xgcd(a, b)  # u*a + v*b = g
    if g != 1:
        raise ValueError(f"slope vector {s} is not primitive")
    # det((a, b), (-v, u)) = a*u + b*v = 1
    return (-v, u)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def canonical_lens_q(p, q):
    """Smallest representative of {+-q^{+-1} mod p}."""
    q %= p
    qi = pow(q, -1, p)
    return min(q, (p - q) % p, qi, (p - qi) % p)


def matching_cycle_type(d, d2, complement=None):
    """Diffeomorphism type of the genus-one manifold glued from slopes ``d`` and ``d2``.

    ``complement`` overrides the basis completion t of the first slope; the
    answer must not depend on it.
    """
    s, s2 = d.vector, d2.vector
    if math.gcd(*s) != 1 or math.gcd(*s2) != 1:
        raise ValueError("slope vectors must be primitive")
    p = abs(det2(s, s2))
    if p == 0:
        return S1XS2
    if p == 1:
        return SPHERE
    t = complement if complement is not None else _complete_basis(s)
    if det2(s, t) != 1:
        raise ValueError("complement must satisfy det(s, t) = 1")
    # s2 = alpha*s + beta*t with beta = det(s, s2), alpha = det(s2, t)
    alpha = det2(s2, t)
    return Lens(p, canonical_lens_q(p, alpha))


def core_types(spec):
    """Types of Q_0..Q_n.  Q_i sits over the arc from c_{i-1} to c_i (cyclically),
    so Q_0 is the one glued from the two end slopes."""
    m = len(spec.slopes)
    return [matching_cycle_type(spec.slopes[(i - 1) % m], spec.slopes[i]) for i in range(m)]


@dataclass(frozen=True)
class Assumptions:
    A: bool
    B: bool
    C: bool
    B_det: bool

    def to_json(self):
        return {"A": self.A, "B": self.B, "B_det": self.B_det, "C": self.C}


def assumptions(spec):
    """Flags A, B, C.

    ``B`` asks that the two end factors f_0 and f_n differ as polynomials over
    the ground field; ``B_det`` is the geometric version det(s_0, s_n) != 0,
    i.e. Q_0 is not S^1 x S^2.  They disagree only for end slopes (k, l, +)
    and (k, l, -) with one of k, l zero, and in characteristic 2.
    """
    A = all(s.satisfies_kl() for s in spec.slopes)
    f = f_components(spec)
    B = A and f[0] != f[-1]
    B_det = A and det2(spec.slopes[0].vector, spec.slopes[-1].vector) != 0
    C = A and all(det2(u.vector, v.vector) != 0 for u, v in combinations(spec.slopes, 2))
    return Assumptions(A, B, C, B_det)


NEG_NEG = "(-1,-1)"
ZERO_NEG_TWO = "(0,-2)"


def exceptional_curve_types(spec):
    """Normal-bundle type of C_1..C_n: (-1,-1) exactly when Q_i is S^3."""
    cores = core_types(spec)
    return [NEG_NEG if cores[i] == SPHERE else ZERO_NEG_TWO for i in range(1, spec.n + 1)]
