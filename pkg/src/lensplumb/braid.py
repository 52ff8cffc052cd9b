"""Affine braids acting on the free group of a punctured annulus.

The annulus with punctures c_0..c_n is a disk with punctures (h, c_0, ..., c_n)
where h is the hole.  Its fundamental group is free on loops around the
punctures; generator 1 is h and generator 2 + i is g_i (around c_i).  Words
are tuples of nonzero ints, a negative entry meaning the inverse generator.

sigma_1..sigma_n are Artin half twists of adjacent punctures c_{i-1}, c_i,
tau is the full twist of c_0 around the hole, rho = tau sigma_1 ... sigma_n
rotates the punctures one step, and sigma_0 = rho sigma_n rho^-1 is the half
twist along the arc from c_n to c_0 that passes the hole.
"""

import random
from dataclasses import dataclass


def free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(w):
    return tuple(-x for x in reversed(w))


def cyclic_reduce(w):
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def conjugate_words(u, v):
    """True if u and v are conjugate in the free group."""
    u, v = cyclic_reduce(u), cyclic_reduce(v)
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = u + u
    return any(doubled[k:k + len(v)] == v for k in range(len(u)))


@dataclass(frozen=True)
class ArtinAutomorphism:
    """Images (and inverse images) of generators 1..m."""

    m: int
    images: tuple
    inverse_images: tuple

    @classmethod
    def identity(cls, m):
        gens = tuple((k,) for k in range(1, m + 1))
        return cls(m, gens, gens)

    def __call__(self, w):
        return _substitute(w, self.images)

    def inverse(self):
        return ArtinAutomorphism(self.m, self.inverse_images, self.images)

    def __mul__(self, other):
        """Composition: (self * other)(x) = self(other(x))."""
        if other.m != self.m:
            raise ValueError("automorphisms of different free groups")
        imgs = tuple(self(w) for w in other.images)
        invs = tuple(_substitute(w, other.inverse_images) for w in self.inverse_images)
        return ArtinAutomorphism(self.m, imgs, invs)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = ArtinAutomorphism.identity(self.m)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, ArtinAutomorphism) and self.m == other.m and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self):
        return all(img == (k,) for k, img in enumerate(self.images, start=1))

    def check_inverse(self):
        return (self * self.inverse()).is_identity() and (self.inverse() * self).is_identity()


def _substitute(w, images):
    out = []
    for x in w:
        out.extend(images[x - 1] if x > 0 else inverse_word(images[-x - 1]))
    return free_reduce(out)


def artin_generator(k, m):
    """Half twist of free generators k, k+1: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k."""
    if not 1 <= k < m:
        raise ValueError(f"no adjacent pair at position {k} among {m} generators")
    imgs = [(j,) for j in range(1, m + 1)]
    invs = list(imgs)
    imgs[k - 1] = (k, k + 1, -k)
    imgs[k] = (k,)
    invs[k - 1] = (k + 1,)
    invs[k] = (-(k + 1), k, k + 1)
    return ArtinAutomorphism(m, tuple(imgs), tuple(invs))


def h_gen():
    return 1


def g_gen(i):
    return i + 2


def _rank(n):
    return n + 2


def tau_auto(n):
    """c_0 travels once around the hole."""
    return artin_generator(1, _rank(n)) ** 2


def rho_auto(n):
    """rho = tau sigma_1 ... sigma_n, verified to satisfy rho sigma_i rho^-1 = sigma_{i+1}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rho = tau_auto(n)
    for i in range(1, n + 1):
        rho = rho * _half_twist(i, n)
    for i in range(1, n):
        if rho * _half_twist(i, n) * rho.inverse() != _half_twist(i + 1, n):
            raise AssertionError(f"rho fails to conjugate sigma_{i} to sigma_{i + 1}")
    return rho


def _half_twist(i, n):
    # c_{i-1} and c_i sit at free-generator positions i + 1 and i + 2
    return artin_generator(i + 1, _rank(n))


def sigma_auto(i, n):
    """Half twist around the arc from c_{i-1 mod n+1} to c_i."""
    if not 0 <= i <= n:
        raise ValueError(f"sigma index {i} out of range 0..{n}")
    if i > 0:
        return _half_twist(i, n)
    rho = rho_auto(n)
    return rho * _half_twist(n, n) * rho.inverse()


# braid words: tuples of (symbol, exponent) with symbol an int i (sigma_i) or "rho"


def word_automorphism(word, n):
    gens = {i: sigma_auto(i, n) for i in range(n + 1)}
    gens["rho"] = rho_auto(n)
    out = ArtinAutomorphism.identity(_rank(n))
    for sym, e in word:
        if sym not in gens:
            raise ValueError(f"unknown braid generator {sym!r}")
        out = out * gens[sym] ** e
    return out


def apply(word, x, n):
    """Image of the free-group word x under the braid word (rightmost letter acts first)."""
    m = _rank(n)
    if any(abs(v) > m or v == 0 for v in x):
        raise ValueError(f"free-group word {x} uses generators outside 1..{m}")
    return word_automorphism(word, n)(x)


def cyclic_distance(i, j, n):
    d = (i - j) % (n + 1)
    return min(d, n + 1 - d)


def verify_presentation(n):
    """Check the three relation families as equalities of automorphisms.

    Far commutation is for cyclic distance >= 2.  The braid relation is for
    cyclically adjacent pairs; when n = 1 the two generators are adjacent on
    both sides and the relation is absent from the affine group, so it is
    reported separately rather than required.
    """
    N = n + 1
    s = [sigma_auto(i, n) for i in range(N)]
    rho = rho_auto(n)
    rho_inv = rho.inverse()
    far, braid, conj = [], [], []
    for i in range(N):
        for j in range(i + 1, N):
            if cyclic_distance(i, j, n) >= 2:
                far.append({"i": i, "j": j, "holds": s[i] * s[j] == s[j] * s[i]})
    for i in range(N):
        j = (i + 1) % N
        braid.append({"i": i, "holds": s[i] * s[j] * s[i] == s[j] * s[i] * s[j]})
    for i in range(N):
        conj.append({"i": i, "holds": rho * s[i] * rho_inv == s[(i + 1) % N]})
    rho_power = rho ** N
    central = all(rho_power * g == g * rho_power for g in s)
    inverses = all(g.check_inverse() for g in s + [rho])
    braid_required = n >= 2
    passed = (
        all(r["holds"] for r in far)
        and all(r["holds"] for r in conj)
        and central
        and inverses
        and (all(r["holds"] for r in braid) if braid_required else True)
    )
    return {
        "n": n,
        "passed": passed,
        "far_commutation": far,
        "braid": braid,
        "braid_required": braid_required,
        "conjugation": conj,
        "rho_power_central": central,
        "inverses": inverses,
    }


def cap_hole(phi):
    """The induced automorphism of the disk model F_{n+1}: fill in the hole (h -> 1).

    Every generator sends h to a conjugate of h, so this is well defined; the
    disk-model generator g_i becomes free generator i + 1.
    """
    def drop(w):
        return free_reduce(tuple((abs(x) - 1) * (1 if x > 0 else -1) for x in w if abs(x) != 1))

    imgs = tuple(drop(w) for w in phi.images[1:])
    invs = tuple(drop(w) for w in phi.inverse_images[1:])
    return ArtinAutomorphism(phi.m - 1, imgs, invs)


def boundary_check(n):
    """Boundary words up to conjugacy, per generator.

    In the annulus model the boundary circles read h g_0 ... g_n (outer) and
    h (inner).  After filling in the hole the disk boundary reads g_0 ... g_n.
    """
    outer = (h_gen(),) + tuple(g_gen(i) for i in range(n + 1))
    inner = (h_gen(),)
    disk = tuple(range(1, n + 2))
    out = {}
    gens = [(f"sigma{i}", sigma_auto(i, n)) for i in range(n + 1)] + [("rho", rho_auto(n))]
    for name, phi in gens:
        capped = cap_hole(phi)
        out[name] = {
            "outer": conjugate_words(phi(outer), outer),
            "inner": conjugate_words(phi(inner), inner),
            "disk": conjugate_words(capped(disk), disk) and capped.check_inverse(),
        }
    return out


# pure braid sampling


def _commute(i, j, n):
    return i != j and n >= 2 and cyclic_distance(i, j, n) >= 2


def raag_reduce(word, n):
    """Normal form in the group generated by the squares sigma_i^2.

    By the Crisp-Paris theorem these squares generate a right-angled Artin
    group whose only relations are commutations of far-apart generators, so a
    word is trivial there exactly when cancellations across commuting letters
    empty it.
    """
    w = list(word)
    changed = True
    while changed:
        changed = False
        for a in range(len(w)):
            for b in range(a + 1, len(w)):
                if w[b][0] == w[a][0] and w[b][1] == -w[a][1]:
                    if all(_commute(w[a][0], w[c][0], n) for c in range(a + 1, b)):
                        del w[b]
                        del w[a]
                        changed = True
                        break
                if not _commute(w[a][0], w[b][0], n):
                    break
            if changed:
                break
    return tuple(w)


def random_pure_word(n, length, rng):
    """A word in the pure twists sigma_i^{+-2}, nontrivial in their group."""
    while True:
        w = tuple((rng.randrange(n + 1), rng.choice((2, -2))) for _ in range(length))
        w = raag_reduce(w, n)
        if w:
            return w


def nontriviality_sample(n, max_length, trials, seed=0):
    """Fraction of random nontrivial pure-braid words acting nontrivially."""
    if max_length > 12 or trials > 10000:
        raise ValueError("sample bounds exceed L <= 12, T <= 10000")
    rng = random.Random(seed)
    gens = {i: sigma_auto(i, n) for i in range(n + 1)}
    squares = {(i, e): gens[i] ** e for i in gens for e in (2, -2)}
    m = _rank(n)
    hits = 0
    for _ in range(trials):
        word = random_pure_word(n, rng.randint(1, max_length), rng)
        hits += any(_act(word, squares, (k,)) != (k,) for k in range(1, m + 1))
    return hits / trials


def _act(word, autos, x):
    # the rightmost letter acts first
    for letter in reversed(word):
        x = autos[letter](x)
    return x
