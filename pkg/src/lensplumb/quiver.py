"""Path algebras of quivers over a commutative coefficient ring, modulo
length-two rewrite rules.

Composition is right-to-left: the word ``("a0", "b0")`` means "traverse b0,
then a0", so it runs from the source of ``b0`` to the target of ``a0``.  Every
rule rewrites a two-letter word to a central coefficient times an idempotent
(or to zero), so each rewrite shortens the word and reduction terminates.
"""

import random
from dataclasses import dataclass

from .field import QQ
from .poly import PolyRing


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int
    degree: int = 0


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = {}
        for a in arrows:
            if a.name in self.arrows:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            if a.source not in self.vertices or a.target not in self.vertices:
                raise ValueError(f"arrow {a.name!r} has an endpoint outside the quiver")
            self.arrows[a.name] = a

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def outgoing(self, v):
        return [a for a in self.arrows.values() if a.source == v]

    def incoming(self, v):
        return [a for a in self.arrows.values() if a.target == v]


class Presentation:
    """A quiver, a coefficient ring, and rules ``(left, right) -> (coeff, vertex)``.

    ``coeff`` is a ring element (``None`` means the word rewrites to zero);
    ``vertex`` is where the resulting idempotent sits.  Local confluence on
    every overlap is checked on construction.
    """

    def __init__(self, quiver, ring, rules, check=True):
        self.quiver = quiver
        self.ring = ring
        self.rules = {}
        for (left, right), (coeff, vertex) in rules.items():
            la, ra = quiver.arrows[left], quiver.arrows[right]
            if ra.target != la.source:
                raise ValueError(f"rule word {left} {right} is not composable")
            if coeff is not None and not (ra.source == la.target == vertex):
                raise ValueError(f"rule {left} {right} must be a loop at vertex {vertex}")
            if coeff is not None:
                coeff = ring(coeff)
                if coeff.is_zero():
                    coeff = None
            self.rules[(left, right)] = (coeff, vertex)
        self._cache = {}
        if check:
            bad = self.critical_pair_failures()
            if bad:
                raise ValueError(f"rewrite system is not confluent on {bad}")

    def __repr__(self):
        return f"Presentation({self.quiver!r} over {self.ring}, {len(self.rules)} rules)"

    # element constructors

    def e(self, v):
        return Element(self, {(v, v, ()): self.ring.one})

    def arrow(self, name):
        a = self.quiver.arrows[name]
        return Element(self, {(a.target, a.source, (name,)): self.ring.one})

    def path(self, word, vertex=None):
        """The (reduced) element of a composable word; ``vertex`` for the empty word."""
        word = tuple(word)
        if not word:
            return self.e(vertex)
        target, source = self.endpoints(word)
        return reduce(Element(self, {(target, source, word): self.ring.one}), self)

    def scalar(self, c, vertex):
        return Element(self, {(vertex, vertex, ()): self.ring(c)})

    def zero(self):
        return Element(self, {})

    def endpoints(self, word):
        arrows = self.quiver.arrows
        for left, right in zip(word, word[1:]):
            if arrows[right].target != arrows[left].source:
                raise ValueError(f"word {word} is not composable at {left} {right}")
        return arrows[word[0]].target, arrows[word[-1]].source

    def degree(self, word):
        return sum(self.quiver.arrows[a].degree for a in word)

    # rewriting

    def rewrite_positions(self, word):
        return [k for k in range(len(word) - 1) if (word[k], word[k + 1]) in self.rules]

    def reduce_word(self, word, vertex, rng=None):
        """Normal form of one word: ``(coeff, key)`` or ``None`` when it is zero.

        With ``rng`` the redex is chosen at random (used to test confluence);
        otherwise the leftmost redex is taken and results are memoised.
        """
        ckey = word if word else vertex
        if rng is None and ckey in self._cache:
            return self._cache[ckey]
        coeff = self.ring.one
        target = source = vertex
        if word:
            target, source = self.endpoints(word)
        w = word
        result = None
        while True:
            pos = self.rewrite_positions(w)
            if not pos:
                result = (coeff, (target, source, w))
                break
            k = rng.choice(pos) if rng is not None else pos[0]
            c, _ = self.rules[(w[k], w[k + 1])]
            if c is None:
                break
            coeff = coeff * c
            w = w[:k] + w[k + 2:]
        if rng is None:
            self._cache[ckey] = result
        return result

    def critical_pair_failures(self):
        """Overlaps ``u v w`` of two rules whose two one-step rewrites disagree."""
        bad = []
        for (u, v), (c1, v1) in self.rules.items():
            for (v2, w), (c2, w2) in self.rules.items():
                if v2 != v:
                    continue
                word = (u, v, w)
                # rewrite u v first: c1 * e_{v1} * w, then the rest
                left = self._apply_then_reduce(word, 0)
                right = self._apply_then_reduce(word, 1)
                if left != right:
                    bad.append(word)
        return bad

    def _apply_then_reduce(self, word, k):
        c, v = self.rules[(word[k], word[k + 1])]
        if c is None:
            return self.zero()
        rest = word[:k] + word[k + 2:]
        target, source = self.endpoints(word)
        if not rest:
            return Element(self, {(target, source, ()): c})
        return reduce(Element(self, {(target, source, rest): c}), self)

    def with_ring(self, ring, coeff_map):
        """Same quiver and rules with every coefficient pushed through ``coeff_map``."""
        rules = {}
        for key, (c, v) in self.rules.items():
            rules[key] = (None if c is None else coeff_map(c), v)
        return Presentation(self.quiver, ring, rules)


class Element:
    """A finite sum ``sum coeff * path``; keys are ``(target, source, word)``."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation, terms):
        self.presentation = presentation
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @property
    def ring(self):
        return self.presentation.ring

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.presentation is other.presentation and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return Element(self.presentation, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.presentation, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other, self.presentation)
        c = self.ring(other)
        return Element(self.presentation, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.ring(other)
        return Element(self.presentation, {k: c * v for k, v in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, Element) or other.presentation is not self.presentation:
            raise ValueError("elements belong to different presentations")

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], len(kv[0][2]), kv[0][2]))

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (t, s, w), c in self.sorted_terms():
            path = " ".join(w) if w else f"e{t}"
            parts.append(f"({c})*{path}")
        return " + ".join(parts)


def reduce(x, P=None, rng=None):
    """Normal form of ``x``: no remaining subword matches a rule."""
    P = P or x.presentation
    out = {}
    for (t, s, w), c in x.terms.items():
        r = P.reduce_word(w, t, rng=rng)
        if r is None:
            continue
        c2, key = r
        val = c * c2
        out[key] = out[key] + val if key in out else val
    return Element(P, out)


def multiply(x, y, P=None):
    """The product ``x * y`` (y first, then x), reduced.  Mismatched ends give 0."""
    P = P or x.presentation
    out = {}
    for (t1, s1, w1), c1 in x.terms.items():
        for (t2, s2, w2), c2 in y.terms.items():
            if s1 != t2:
                continue
            r = P.reduce_word(w1 + w2, t1)
            if r is None:
                continue
            c, key = r
            val = c1 * c2 * c
            out[key] = out[key] + val if key in out else val
    return Element(P, out)


# the cyclic and linear presentations


def t_ring(n, field=QQ):
    return PolyRing(field, tuple(f"t{i}" for i in range(n + 1)))


def cyclic_presentation(n, ring, coeffs, forward="a", backward="b"):
    """Cyclic quiver on 0..n, arrows ``forward_i: i -> i+1`` and ``backward_i: i+1 -> i``,
    rules ``f_i b_i -> coeffs[i] e_{i+1}`` and ``b_i f_i -> coeffs[i] e_i``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n + 1
    arrows = []
    rules = {}
    for i in range(m):
        a, b = f"{forward}{i}", f"{backward}{i}"
        arrows.append(Arrow(a, i, (i + 1) % m))
        arrows.append(Arrow(b, (i + 1) % m, i))
        rules[(a, b)] = (coeffs[i], (i + 1) % m)
        rules[(b, a)] = (coeffs[i], i)
    return Presentation(Quiver(range(m), arrows), ring, rules)


def linear_presentation(n, ring, coeffs, forward="a", backward="b", loops=()):
    """Linear quiver on 1..n with arrow pairs indexed 1..n-1 (the cyclic quiver
    with vertex 0 removed).  ``loops`` are extra ``(name, vertex, degree)``
    arrows, each squaring to zero."""
    if n < 1:
        raise ValueError("n must be at least 1")
    arrows = []
    rules = {}
    for i in range(1, n):
        a, b = f"{forward}{i}", f"{backward}{i}"
        arrows.append(Arrow(a, i, i + 1))
        arrows.append(Arrow(b, i + 1, i))
        rules[(a, b)] = (coeffs[i], i + 1)
        rules[(b, a)] = (coeffs[i], i)
    for name, v, deg in loops:
        arrows.append(Arrow(name, v, v, deg))
        rules[(name, name)] = (None, v)
    return Presentation(Quiver(range(1, n + 1), arrows), ring, rules)


def build_cyclic_presentation(n, field=QQ):
    R = t_ring(n, field)
    return cyclic_presentation(n, R, R.gens())


def build_linear_presentation(n, field=QQ):
    R = t_ring(n, field)
    return linear_presentation(n, R, R.gens())


def base_change(P, images, ring=None):
    """Substitute ``t_i -> images[i]`` in every rule.

    ``images`` is a sequence of ring elements, or a PlumbingSpec, in which case
    ``t_i -> f_i(x, y)``.
    """
    from .geometry import PlumbingSpec, f_components

    if isinstance(images, PlumbingSpec):
        ring = ring or images.xy_ring()
        images = f_components(images, ring)
    images = list(images)
    if len(images) != P.ring.nvars:
        raise ValueError(f"presentation has {P.ring.nvars} parameters, got {len(images)} images")
    ring = ring or images[0].ring
    return P.with_ring(ring, lambda c: c.substitute(images, ring))


# normal-form paths on the cyclic quiver


def cyclic_path(n, j, i, w, forward="a", backward="b"):
    """The unique reduced path from ``j`` to ``i`` with winding number ``w``.

    Lifting to the universal cover, a reduced path is a monotone walk with
    signed displacement ``D = (i - j) mod (n+1) + (n+1)*w``; forward arrows
    when ``D > 0``, backward when ``D < 0``, the idempotent when ``D = 0``.
    """
    m = n + 1
    D = (i - j) % m + m * w
    word = []
    v = j
    if D > 0:
        for _ in range(D):
            word.append(f"{forward}{v}")
            v = (v + 1) % m
    elif D < 0:
        for _ in range(-D):
            v = (v - 1) % m
            word.append(f"{backward}{v}")
    return tuple(reversed(word))


def winding(n, word, forward="a"):
    """Winding number of a monotone reduced path (from its arrow count)."""
    if not word:
        return 0
    D = len(word) if word[0].startswith(forward) else -len(word)
    return D // (n + 1)


def count_monomials(nvars, degree_bound):
    """Number of monomials in ``nvars`` variables of total degree < ``degree_bound``."""
    from math import comb

    if degree_bound <= 0:
        return 0
    return comb(degree_bound - 1 + nvars, nvars)


def basis(P, i, j, winding_bound=0, degree_bound=1, cyclic=True):
    """Reduced paths from ``j`` to ``i`` paired with the number of coefficient
    monomials of degree < ``degree_bound``.

    Cyclic presentations: one path per winding number ``|w| <= winding_bound``
    (so ``2W+1`` of them).  Linear ones: the unique monotone path.
    """
    nmono = count_monomials(P.ring.nvars, degree_bound)
    if cyclic:
        n = len(P.quiver.vertices) - 1
        fwd, bwd = _arrow_prefixes(P)
        return [(cyclic_path(n, j, i, w, fwd, bwd), nmono) for w in range(-winding_bound, winding_bound + 1)]
    return [(linear_path(i, j, *_arrow_prefixes(P)), nmono)]


def linear_path(i, j, forward="a", backward="b"):
    """The monotone path from ``j`` to ``i`` on the linear quiver."""
    if i == j:
        return ()
    if i > j:
        return tuple(f"{forward}{v}" for v in range(i - 1, j - 1, -1))
    return tuple(f"{backward}{v}" for v in range(i, j))


def _arrow_prefixes(P):
    names = sorted(a for a in P.quiver.arrows if P.quiver.arrows[a].degree == 0)
    prefixes = sorted({a.rstrip("0123456789") for a in names})
    fwd = next(p for p in prefixes if p in ("a", "eta"))
    bwd = next(p for p in prefixes if p in ("b", "delta"))
    return fwd, bwd


def random_word(P, rng, length, start=None):
    """A random composable word (written order), built by a walk backwards from its source."""
    arrows = list(P.quiver.arrows.values())
    v = start if start is not None else rng.choice(P.quiver.vertices)
    word = []
    for _ in range(length):
        out = [a for a in arrows if a.source == v]
        if not out:
            break
        a = rng.choice(out)
        word.append(a.name)
        v = a.target
    return tuple(reversed(word)), (start if start is not None else None)


def random_element(P, rng, nterms=3, max_len=6, coeff=None):
    from .poly import random_poly

    terms = {}
    for _ in range(rng.randint(1, nterms)):
        v = rng.choice(P.quiver.vertices)
        word, _ = random_word(P, rng, rng.randint(0, max_len), start=v)
        c = coeff(rng) if coeff else random_poly(P.ring, rng)
        if word:
            t, s = P.endpoints(word)
        else:
            t = s = v
        key = (t, s, word)
        terms[key] = terms[key] + c if key in terms else c
    return Element(P, terms)


def reduce_random(x, seed):
    return reduce(x, rng=random.Random(seed))
