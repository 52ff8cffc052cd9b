"""Sparse exact polynomials, Laurent polynomials and truncated power series.

One class, :class:`Poly`, covers all three; the behaviour is fixed by its
:class:`PolyRing`:

* ``laurent=True`` allows negative exponents (used for K[z1^{+-1}, z2^{+-1}]);
* ``order=N`` truncates every result to total degree < N (K[[x, y]] mod m^N).

Terms are stored as ``{exponent_tuple: coefficient}`` with no zero
coefficients.  Monomials are ordered graded-lexicographically with the first
variable largest.
"""


def grlex_key(exp):
    return (sum(exp), exp)


class PolyRing:
    def __init__(self, field, names, laurent=False, order=None):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.laurent = bool(laurent)
        if order is not None and (laurent or order < 1):
            raise ValueError("truncation order must be >= 1 and excludes Laurent exponents")
        self.order = order
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.laurent == other.laurent
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.laurent, self.order))

    def __repr__(self):
        body = ", ".join(self.names)
        if self.laurent:
            return f"{self.field}[{body}, inverses]"
        if self.order is not None:
            return f"{self.field}[[{body}]]/deg>={self.order}"
        return f"{self.field}[{body}]"

    def with_order(self, order):
        return PolyRing(self.field, self.names, order=order)

    def polynomial_ring(self):
        return PolyRing(self.field, self.names)

    # constructors

    def from_dict(self, terms):
        return Poly(self, terms)

    @property
    def zero(self):
        return Poly(self, {}, _trusted=True)

    @property
    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field(c)
        if c == 0:
            return self.zero
        return Poly(self, {self._zero_exp: c}, _trusted=True)

    def monomial(self, exp, c=1):
        return Poly(self, {tuple(exp): c})

    def gen(self, name):
        exp = [0] * self.nvars
        exp[self.names.index(name)] = 1
        return self.monomial(exp)

    def gens(self):
        return tuple(self.gen(n) for n in self.names)

    def __call__(self, value):
        if isinstance(value, Poly):
            if value.ring != self:
                raise ValueError(f"element of {value.ring} is not in {self}")
            return value
        return self.const(value)

    def monomials_below(self, degree):
        """All exponent vectors of total degree < ``degree`` in grlex order."""
        out = []
        for d in range(degree):
            for exp in _compositions(d, self.nvars):
                out.append(exp)
        out.sort(key=grlex_key)
        return out


def _compositions(d, k):
    if k == 0:
        if d == 0:
            yield ()
        return
    if k == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        field = ring.field
        order = ring.order
        clean = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != ring.nvars:
                raise ValueError(f"exponent {exp} has wrong length for {ring}")
            if not ring.laurent and min(exp, default=0) < 0:
                raise ValueError(f"negative exponent {exp} outside a Laurent ring")
            if order is not None and sum(exp) >= order:
                continue
            c = field(c)
            if c != 0:
                clean[exp] = field.add(clean.get(exp, field.zero), c)
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # basic queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def sorted_terms(self):
        """Terms in decreasing grlex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def is_monomial(self):
        return len(self.terms) == 1

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        field = self.ring.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = field.add(out.get(exp, field.zero), c)
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Poly(self.ring, {e: field.neg(c) for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field(other)
            if c == 0:
                return self.ring.zero
            field = self.ring.field
            return Poly(self.ring, {e: field.mul(v, c) for e, v in self.terms.items()}, _trusted=True)
        other = self._coerce(other)
        field = self.ring.field
        order = self.ring.order
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if order is not None and d1 + sum(e2) >= order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = field.add(out.get(e, field.zero), field.mul(c1, c2))
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self):
        """Multiplicative inverse of a Laurent monomial or of a series unit."""
        if self.ring.order is not None:
            return series_invert(self)
        if self.is_monomial():
            (exp, c), = self.terms.items()
            if self.ring.laurent or not any(exp):
                return Poly(self.ring, {tuple(-e for e in exp): self.ring.field.inv(c)}, _trusted=True)
        raise ZeroDivisionError(f"{self} is not a unit in {self.ring}")

    def monic(self):
        _, c = self.leading_term()
        return self * self.ring.field.inv(c)

    def substitute(self, images, ring):
        """Ring map sending variable ``names[i]`` to ``images[i]`` (Polys in ``ring``)."""
        if len(images) != self.ring.nvars:
            raise ValueError(f"need {self.ring.nvars} images, got {len(images)}")
        powers = [dict() for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        result = ring.zero
        for exp, c in self.terms.items():
            term = ring.const(c)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def change_ring(self, ring):
        """Reinterpret the same terms in ``ring`` (same variables, possibly truncated)."""
        if ring.names != self.ring.names:
            raise ValueError("variable lists differ")
        return Poly(ring, self.terms)

    # printing

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = []
            for name, e in zip(self.ring.names, exp):
                if e == 1:
                    mono.append(name)
                elif e != 0:
                    mono.append(f"{name}^{e}")
            mono = "*".join(mono)
            negative = self.ring.field.characteristic == 0 and c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-", body) if negative else ("+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def series_invert(s):
    """Inverse of a truncated power series with nonzero constant term.

    Uses ``1/(c + r) = c^{-1} * sum_j (-r/c)^j``; the sum is finite because
    ``r`` has no constant term and the ring truncates at total degree N.
    """
    ring = s.ring
    if ring.order is None:
        raise ValueError("series_invert needs a truncated ring")
    c0 = s.constant_term()
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    cinv = ring.field.inv(c0)
    r = (s - ring.const(c0)) * cinv
    step = -r
    total = ring.one
    power = ring.one
    for _ in range(1, ring.order):
        power = power * step
        if power.is_zero():
            break
        total = total + power
    return total * cinv


def random_poly(ring, rng, max_terms=3, max_exp=2, coeff_range=3):
    """Small random element, for property tests."""
    lo = -max_exp if ring.laurent else 0
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(lo, max_exp) for _ in range(ring.nvars))
        terms[exp] = rng.randint(-coeff_range, coeff_range)
    return Poly(ring, terms)


def poly_arith(a, b, op):
    """``a + b`` or ``a * b``; both operands must live in the same ring."""
    if a.ring != b.ring:
        raise ValueError(f"variable lists differ: {a.ring.names} vs {b.ring.names}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
