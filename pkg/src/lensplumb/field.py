"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values: ``fractions.Fraction`` for QQ and ``int``
residues in ``[0, p)`` for F_p.  A field object knows how to normalise,
combine and invert them; nothing here ever rounds.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Rationals:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero is not invertible")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return {"kind": "rational"}


class PrimeField:
    """The field with ``p`` elements, ``p`` prime and at most 2**31."""

    def __init__(self, p):
        p = int(p)
        if p > 2**31 or not _is_prime(p):
            raise ValueError(f"{p} is not a prime <= 2**31")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero is not invertible")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self):
        return {"kind": "prime", "p": self.p}


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def field_from_json(obj):
    """Build a field from ``{"kind": "rational"}`` or ``{"kind": "prime", "p": p}``."""
    if obj is None:
        return QQ
    kind = obj.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(obj["p"])
    raise ValueError(f"unknown field kind {kind!r}")


def parse_field(text):
    """Parse the command-line spelling ``rational`` or ``fp:<p>``."""
    if text in ("rational", "QQ", "Q"):
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError(f"cannot parse field {text!r}; expected 'rational' or 'fp:<p>'")
