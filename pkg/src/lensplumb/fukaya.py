"""The wrapped-Fukaya side: a cyclic quiver over K[z1^{+-1}, z2^{+-1}].

Generators are idempotents ``theta^i``, arrows ``eta_i: i -> i+1`` and
``delta_i: i+1 -> i``, with ``delta_i eta_i = f_i(z1, z2) theta^i`` and
``eta_i delta_i = f_i(z1, z2) theta^{i+1}``.  Everything sits in degree 0.
The third Laurent direction is not a variable: it is the winding number of
a path around the cycle.

``psi`` compares this algebra with the base-changed cyclic algebra over the
truncated series ring K[[x, y]] via ``z1 -> x - 1``, ``z2 -> y - 1``.
"""

from dataclasses import dataclass, field as dc_field
from math import comb

from .geometry import f_component, f_components, f_total
from .poly import PolyRing
from .quiver import Element, cyclic_path, cyclic_presentation, reduce


def z_ring(field):
    return PolyRing(field, ("z1", "z2"), laurent=True)


@dataclass
class FukayaPresentation:
    spec: object
    presentation: object

    @property
    def n(self):
        return self.spec.n

    @property
    def ring(self):
        return self.presentation.ring

    def theta(self, i):
        return self.presentation.e(i)

    def eta(self, i):
        return self.presentation.arrow(f"eta{i}")

    def delta(self, i):
        return self.presentation.arrow(f"delta{i}")

    def z(self, k, i, power=1):
        """``z_k^power`` placed at vertex i."""
        return self.presentation.scalar(self.ring.gens()[k - 1] ** power, i)


def build_fukaya_presentation(spec):
    R = z_ring(spec.field)
    P = cyclic_presentation(spec.n, R, f_components(spec, R), forward="eta", backward="delta")
    return FukayaPresentation(spec, P)


def winding_element(F, i, r):
    """``x_r`` at vertex i: r full forward cycles, the idempotent, or |r| backward cycles."""
    word = cyclic_path(F.n, i, i, r, "eta", "delta")
    return F.presentation.path(word, vertex=i)


@dataclass
class CheckReport:
    passed: bool = True
    checked: int = 0
    failures: list = dc_field(default_factory=list)

    def record(self, ok, witness):
        self.checked += 1
        if not ok:
            self.passed = False
            self.failures.append(witness)

    def to_json(self):
        return {"passed": self.passed, "checked": self.checked, "failures": self.failures}


def endomorphism_ring_check(spec, i, W, F=None):
    """Check x_{-1} x_1 = f(z1, z2) theta^i and x_r x_r' = x_{r+r'} (r r' >= 0, |r|, |r'| <= W)."""
    F = F or build_fukaya_presentation(spec)
    rep = CheckReport()
    x = {r: winding_element(F, i, r) for r in range(-2 * W, 2 * W + 1)}
    f = f_total(spec, F.ring)
    lhs = x[-1] * x[1]
    rep.record(lhs == F.presentation.scalar(f, i), {"vertex": i, "identity": "x_-1*x_1", "got": str(lhs)})
    for r in range(-W, W + 1):
        for s in range(-W, W + 1):
            if r * s < 0:
                continue
            prod = x[r] * x[s]
            rep.record(prod == x[r + s], {"vertex": i, "r": r, "s": s, "got": str(prod)})
    return rep


# the comparison map


def series_ring(field, N):
    return PolyRing(field, ("x", "y"), order=N)


def psi_target(spec, N):
    """The cyclic algebra over K[[x, y]] / (degree >= N) with t_i -> f_i(x - 1, y - 1).

    This is the usual base change t_i -> f_i(x, y) composed with the recentring
    of coordinates at z = (-1, -1) that ``z1 -> x - 1``, ``z2 -> y - 1`` encodes.
    """
    S = series_ring(spec.field, N)
    x, y = S.gens()
    # build f_i untruncated: truncating first would drop terms the shift brings down
    R = S.polynomial_ring()
    shifted = [f_component(d, R).substitute([x - 1, y - 1], S) for d in spec.slopes]
    return cyclic_presentation(spec.n, S, shifted)


def literal_target(spec, N):
    """The cyclic algebra over K[[x, y]] with the unshifted base change t_i -> f_i(x, y)."""
    S = series_ring(spec.field, N)
    return cyclic_presentation(spec.n, S, f_components(spec, S))


class _CoefficientMap:
    """z1 -> x - 1, z2 -> y - 1 on Laurent polynomials, memoised per monomial."""

    def __init__(self, S):
        x, y = S.gens()
        self.S = S
        self.images = (x - 1, y - 1)
        self.cache = {}

    def monomial(self, exp):
        if exp not in self.cache:
            out = self.S.one
            for base, e in zip(self.images, exp):
                if e:
                    out = out * base ** e
            self.cache[exp] = out
        return self.cache[exp]

    def __call__(self, c):
        out = self.S.zero
        for exp, v in c.terms.items():
            out = out + self.monomial(exp) * v
        return out


_MAPS = {}


def _coefficient_map(S):
    if S not in _MAPS:
        _MAPS[S] = _CoefficientMap(S)
    return _MAPS[S]


def _rename(word):
    return tuple(a.replace("eta", "a").replace("delta", "b") for a in word)


def psi(element, target):
    """Generator-wise image: theta^i -> e_i, eta_i -> a_i, delta_i -> b_i,
    z_k^{+-1} -> (x - 1)^{+-1} or (y - 1)^{+-1} as truncated series."""
    cmap = _coefficient_map(target.ring)
    out = {}
    for (t, s, w), c in element.terms.items():
        key = (t, s, _rename(w))
        val = cmap(c)
        out[key] = out[key] + val if key in out else val
    return reduce(Element(target, out), target)


def relation_images(F, target):
    """psi of every defining relation, as (label, image) pairs."""
    out = []
    R = F.ring
    for i, d in enumerate(F.spec.slopes):
        f = f_component(d, R)
        j = (i + 1) % (F.n + 1)
        rel1 = Element(F.presentation, {(i, i, ("delta%d" % i, "eta%d" % i)): R.one, (i, i, ()): -f})
        rel2 = Element(F.presentation, {(j, j, ("eta%d" % i, "delta%d" % i)): R.one, (j, j, ()): -f})
        out.append((f"delta{i}*eta{i}", psi(rel1, target)))
        out.append((f"eta{i}*delta{i}", psi(rel2, target)))
    return out


def _block_matrix(F, target, i, j, w, N):
    """Images of z1^a z2^b * path(j -> i, w) for a + b < N, as rows over the x^c y^d basis."""
    word = cyclic_path(F.n, j, i, w, "eta", "delta")
    R = F.ring
    monos = target.ring.monomials_below(N)
    index = {m: k for k, m in enumerate(monos)}
    twords = _rename(word)
    rows = []
    for exp in monos:
        src = Element(F.presentation, {(i, j, word): R.monomial(exp)})
        img = psi(src, target)
        row = [target.ring.field.zero] * len(monos)
        for (t, s, w2), c in img.terms.items():
            if (t, s, w2) != (i, j, twords):
                return None, monos
            for e, v in c.terms.items():
                row[index[e]] = v
        rows.append(row)
    return rows, monos


def _rank(rows, field):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(v, inv) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [field.add(a, field.neg(field.mul(c, b))) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _unitriangular(rows, monos):
    """Row for monomial m has coefficient 1 at m and is supported on divisors of m."""
    for k, m in enumerate(monos):
        for l, m2 in enumerate(monos):
            v = rows[k][l]
            if l == k:
                if v != 1:
                    return False
            elif v != 0 and not all(a <= b for a, b in zip(m2, m)):
                return False
    return True


def verify_psi_iso(spec, W, N):
    """Truncated check that psi is an isomorphism.

    (a) every defining relation maps to zero in the shifted target;
    (b) for every vertex pair (i, j) and |w| <= W, the block spanned by
    z1^a z2^b * path (a + b < N) maps onto the x^c y^d * path block, both of
    dimension C(N+1, 2), with a unitriangular matrix.

    The report also lists what the relations become under the unshifted base
    change t_i -> f_i(x, y); these are generally nonzero.
    """
    F = build_fukaya_presentation(spec)
    target = psi_target(spec, N)
    literal = literal_target(spec, N)
    report = {"relations": CheckReport(), "blocks": CheckReport(), "literal_residuals": []}
    for label, img in relation_images(F, target):
        report["relations"].record(img.is_zero(), {"relation": label, "image": str(img)})
    for label, img in relation_images(F, literal):
        report["literal_residuals"].append({"relation": label, "image": str(img)})
    dim = comb(N + 1, 2)
    m = spec.n + 1
    for i in range(m):
        for j in range(m):
            for w in range(-W, W + 1):
                rows, monos = _block_matrix(F, target, i, j, w, N)
                witness = {"i": i, "j": j, "w": w}
                if rows is None:
                    report["blocks"].record(False, dict(witness, reason="image leaves the block"))
                    continue
                # rows follow grlex and divisors come earlier, so a unitriangular
                # matrix is lower triangular with unit diagonal: full rank
                tri = _unitriangular(rows, monos)
                rank = len(monos) if tri else _rank(rows, spec.field)
                ok = len(monos) == dim and rank == dim and tri
                report["blocks"].record(ok, dict(witness, source_dim=dim, target_dim=len(monos), rank=rank))
    report["passed"] = report["relations"].passed and report["blocks"].passed
    return report
