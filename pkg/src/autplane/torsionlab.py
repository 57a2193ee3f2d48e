"""Finite-characteristic probes.

* the Baumslag-Solitar pair S(x, y) = (y, 2x), T(x, y) = (x, y + x^2) acting
  on F_p^2, with sigma = S^-1 and tau = T;
* the identity  sum_{u in E} u^(p^r - 1) = prod_{u in E, u != 0} u;
* nilpotency classes of G(r) = E |x F_p[E] and of E |x M.
"""

from __future__ import annotations

import itertools
import random

from .exactfield import GaloisField, PolyRing, PrimeField, is_prime


class NotNilpotent(ValueError):
    pass


class GroupTooLarge(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations of F_p^2


class FinitePerm:
    """Permutation of F_p^2; the point (x, y) has index x*p + y."""

    __slots__ = ("p", "table")

    def __init__(self, p: int, table):
        table = tuple(table)
        if len(table) != p * p or sorted(table) != list(range(p * p)):
            raise ValueError("not a permutation of F_p^2")
        self.p = p
        self.table = table

    @classmethod
    def from_map(cls, p, fn):
        table = []
        for x in range(p):
            for y in range(p):
                u, v = fn(x, y)
                table.append((u % p) * p + v % p)
        return cls(p, table)

    @classmethod
    def identity(cls, p):
        return cls(p, range(p * p))

    def __call__(self, x, y):
        i = self.table[(x % self.p) * self.p + y % self.p]
        return divmod(i, self.p)

    def __mul__(self, other):
        """(self * other)(v) = self(other(v))."""
        return FinitePerm(self.p, [self.table[i] for i in other.table])

    def inverse(self):
        inv = [0] * len(self.table)
        for i, j in enumerate(self.table):
            inv[j] = i
        return FinitePerm(self.p, inv)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = FinitePerm.identity(self.p)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, FinitePerm) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.table))

    def moved(self):
        return [divmod(i, self.p) for i, j in enumerate(self.table) if i != j]


def bs_action(p: int):
    """(sigma, tau) = ((S mod p)^-1, T mod p)."""
    if p == 2 or not is_prime(p):
        raise ValueError("bs_action needs an odd prime")
    half = pow(2, -1, p)
    sigma = FinitePerm.from_map(p, lambda x, y: (y * half, x))
    tau = FinitePerm.from_map(p, lambda x, y: (x, y + x * x))
    return sigma, tau


def bs_relation_holds(p: int) -> bool:
    s, t = bs_action(p)
    return s**2 * t * s**-2 == t**2


def parse_bs_word(text: str):
    """Letters s, t and their inverses S, T (also s^-1 / t^-1 with exponents)."""
    out = []
    i = 0
    text = text.replace(" ", "").replace("*", "")
    while i < len(text):
        ch = text[i]
        if ch not in "stST":
            raise ValueError(f"unexpected {ch!r} in word at position {i}")
        sign = -1 if ch.isupper() else 1
        i += 1
        exp = 1
        if i < len(text) and text[i] == "^":
            j = i + 1
            if j < len(text) and text[j] == "-":
                j += 1
            k = j
            while k < len(text) and text[k].isdigit():
                k += 1
            if k == j:
                raise ValueError(f"bad exponent at position {i}")
            exp = int(text[i + 1 : k])
            i = k
        out.append((ch.lower(), sign * exp))
    return out


def eval_word(word, p: int) -> FinitePerm:
    if isinstance(word, str):
        word = parse_bs_word(word)
    s, t = bs_action(p)
    out = FinitePerm.identity(p)
    for g, e in word:
        out = out * (s if g == "s" else t) ** e
    return out


def separate(word, primes):
    """First listed prime on which the word acts nontrivially, plus a per-prime report."""
    report = {}
    first = None
    for p in primes:
        perm = eval_word(word, p)
        moved = perm.moved()
        report[p] = {"trivial": not moved, "moved": len(moved), "witness": moved[0] if moved else None}
        if moved and first is None:
            first = p
    return first, report


# ---------------------------------------------------------------------------
# sum / product identity


def _span(p, vectors, add, scale, zero):
    out = []
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        v = zero
        for c, w in zip(coeffs, vectors):
            if c:
                v = add(v, scale(c, w))
        out.append(v)
    return out


def sum_product_check(p: int, r: int, algebra: str = "poly"):
    """Check sum_{u in E} u^(p^r - 1) == prod_{u != 0} u exhaustively.

    ``algebra='poly'`` takes E = span(a_1..a_r) in F_p[a_1..a_r];
    ``algebra='gf'`` takes E = A = F_{p^r}.
    """
    if not is_prime(p) or p**r > 81:
        raise ValueError("need p prime and p^r <= 81")
    q = p**r
    if algebra == "poly":
        names = tuple(f"a{i + 1}" for i in range(r)) if r > 1 else ("a",)
        R = PolyRing(PrimeField(p), names)
        gens = [R.gen(v) for v in names]
        E = _span(p, gens, lambda a, b: a + b, lambda c, w: w.scale(c), R.zero())
        lhs = R.zero()
        rhs = R.one()
        for u in E:
            lhs = lhs + u ** (q - 1)
            if u:
                rhs = rhs * u
        text = lambda v: v.to_text()  # noqa: E731
    elif algebra == "gf":
        F = GaloisField(p, r)
        E = F.elements()
        lhs = F.zero
        rhs = F.one
        for u in E:
            lhs = lhs + u ** (q - 1)
            if u:
                rhs = rhs * u
        text = repr
    else:
        raise ValueError("algebra must be 'poly' or 'gf'")
    return {"p": p, "r": r, "algebra": algebra, "size": len(E), "sum": text(lhs), "product": text(rhs), "ok": lhs == rhs}


# ---------------------------------------------------------------------------
# finite groups


class FiniteGroup:
    """Group generated by ``gens`` under ``mul``; elements must be hashable."""

    def __init__(self, gens, mul, inv, identity, limit=10**4, name="G"):
        self.gens = list(gens)
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.name = name
        self.limit = limit
        self.elements = self.closure(self.gens)

    def closure(self, gens):
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            if len(seen) > self.limit:
                raise GroupTooLarge(f"{self.name} has more than {self.limit} elements")
            frontier = nxt
        return frozenset(seen)

    @property
    def order(self):
        return len(self.elements)

    def commutator(self, a, b):
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def conj(self, h, g):
        return self.mul(self.mul(self.inv(g), h), g)

    def normal_closure(self, subset):
        gens = set(subset) - {self.identity}
        H = self.closure(gens)
        while True:
            extra = {self.conj(h, g) for h in gens for g in self.gens} - H
            if not extra:
                return H
            gens |= extra
            H = self.closure(gens)

    def is_abelian(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in self.gens for b in self.gens)

    def check_axioms(self, samples=200, seed=0):
        rng = random.Random(seed)
        elems = sorted(self.elements, key=repr)
        for _ in range(samples):
            a, b, c = (rng.choice(elems) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
            if self.mul(a, self.inv(a)) != self.identity or self.mul(self.identity, a) != a:
                return False
            if self.mul(a, b) not in self.elements:
                return False
        return True


def lower_central_series(G: FiniteGroup):
    series = [G.elements]
    while True:
        cur = series[-1]
        nxt = G.normal_closure({G.commutator(g, h) for g in G.gens for h in cur})
        if nxt == cur:
            return series
        series.append(nxt)


def nilpotency_class(G: FiniteGroup) -> int:
    series = lower_central_series(G)
    if len(series[-1]) != 1:
        raise NotNilpotent(f"{G.name}: lower central series stops at order {len(series[-1])}")
    return len(series) - 1


# ---------------------------------------------------------------------------
# G(r) = E |x F_p[E] and E |x M


def _vec_points(p, r):
    return list(itertools.product(range(p), repeat=r))


def build_G(p: int, r: int, limit=10**4) -> FiniteGroup:
    """G(r) with E = (Z/p)^r acting on F_p[E] by translation."""
    pts = _vec_points(p, r)
    index = {e: i for i, e in enumerate(pts)}
    size = len(pts)
    if size * p**size > limit:
        raise GroupTooLarge(f"G({r}) over F_{p} has order {size * p**size}")

    def add(e, f):
        return tuple((a + b) % p for a, b in zip(e, f))

    def neg(e):
        return tuple(-a % p for a in e)

    def shift(e, v):
        # (e.v)[x] = v[x - e]
        return tuple(v[index[add(x, neg(e))]] for x in pts)

    def mul(g, h):
        return (add(g[0], h[0]), tuple((a + b) % p for a, b in zip(g[1], shift(g[0], h[1]))))

    def inv(g):
        ne = neg(g[0])
        return (ne, tuple(-a % p for a in shift(ne, g[1])))

    zero_v = (0,) * size
    ident = ((0,) * r, zero_v)
    gens = []
    for i in range(r):
        e = tuple(int(i == j) for j in range(r))
        gens.append((e, zero_v))
    gens.append(((0,) * r, tuple(int(x == (0,) * r) for x in pts)))
    return FiniteGroup(gens, mul, inv, ident, limit, name=f"G({r}) over F_{p}")


def build_EM(p: int, r: int, a=1, limit=10**4) -> FiniteGroup:
    """E |x M with A = E = F_{p^r} and M spanned by translates of a*t^(p^r - 1)."""
    if p**r > 27:
        raise ValueError("build_EM needs p^r <= 27")
    F = GaloisField(p, r)
    a = F(a) if not hasattr(a, "field") else a
    if not a:
        raise ValueError("a must be nonzero")
    pts = F.elements()
    index = {u: i for i, u in enumerate(pts)}
    q = p**r
    f = tuple(a * t ** (q - 1) for t in pts)

    def shift(u, m):
        # (u.m)(t) = m(t + u)
        return tuple(m[index[t + u]] for t in pts)

    def mul(g, h):
        return (g[0] + h[0], tuple(x + y for x, y in zip(g[1], shift(g[0], h[1]))))

    def inv(g):
        nu = -g[0]
        return (nu, tuple(-x for x in shift(nu, g[1])))

    ident = (F.zero, tuple(F.zero for _ in pts))
    basis_E = [F.from_coeffs([int(i == j) for j in range(r)]) for i in range(r)]
    gens = [(u, ident[1]) for u in basis_E] + [(F.zero, f)]
    return FiniteGroup(gens, mul, inv, ident, limit, name=f"E|xM over F_{q}")


def expected_class(p: int, r: int) -> int:
    return 1 + (p - 1) * r
