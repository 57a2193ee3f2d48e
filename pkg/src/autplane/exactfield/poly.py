"""Sparse exact multivariate polynomials.

A ``PolyRing`` fixes the coefficient field and an ordered tuple of variable
names.  Variables listed as ``odd`` square to zero; every operator we apply
is linear in the odd variable, so no Koszul signs are needed and the odd
variable is simply a commuting nilpotent of order two.

Terms are kept in a dict ``{exponent tuple: nonzero coefficient}``; printing
and iteration use graded lex order with the declared variable order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .fields import QQ, Field, _join_terms


class RingMismatch(ValueError):
    pass


def _grlex_key(e):
    return (sum(e), e)


class PolyRing:
    def __init__(self, field: Field = QQ, gens=("x", "y"), odd=()):
        self.field = field
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("duplicate variable names")
        self.odd = frozenset(odd)
        if not self.odd <= set(self.gens):
            raise ValueError("odd variables must be generators")
        self.nvars = len(self.gens)
        self._odd_idx = tuple(i for i, g in enumerate(self.gens) if g in self.odd)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.gens == other.gens
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.field, self.gens, self.odd))

    def __repr__(self):
        odd = f", odd={sorted(self.odd)}" if self.odd else ""
        return f"PolyRing({self.field!r}, {self.gens}{odd})"

    def index(self, name: str) -> int:
        try:
            return self.gens.index(name)
        except ValueError:
            raise RingMismatch(f"{name!r} is not a variable of {self!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens_polys(self):
        return tuple(self.gen(g) for g in self.gens)

    def monomial(self, exps, coeff=1) -> "Polynomial":
        if isinstance(exps, dict):
            e = [0] * self.nvars
            for k, v in exps.items():
                e[self.index(k)] = v
            exps = e
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def from_dict(self, terms) -> "Polynomial":
        return Polynomial(self, {tuple(k): self.field(v) for k, v in terms.items()})

    def coerce(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return x.change_ring(self)
        return self.const(x)

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_poly

        return parse_poly(text, self)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(field, self.gens, self.odd)


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        odd = ring._odd_idx
        if odd:
            terms = {e: c for e, c in terms.items() if c and all(e[i] <= 1 for i in odd)}
        else:
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # -- basic protocol ---------------------------------------------------
    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        try:
            return self.ring.const(other)
        except (ValueError, TypeError):
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(other).terms
        except (ValueError, TypeError, ZeroDivisionError):
            return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.to_text()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            out[e] = c if v is None else v + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out = {}
        odd = self.ring._odd_idx
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if odd and any(e[i] > 1 for i in odd):
                    continue
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def __truediv__(self, other):
        """Division by a scalar or by a constant polynomial only."""
        if isinstance(other, Polynomial):
            if not other.is_constant():
                raise ValueError("use exact_div for polynomial division")
            other = other.constant_coeff()
        c = self.ring.field(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(self.ring.field.one / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- inspection -------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coeff(self, exps):
        if isinstance(exps, dict):
            e = [0] * self.ring.nvars
            for k, v in exps.items():
                e[self.ring.index(k)] = v
            exps = tuple(e)
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def degree(self, var: str | None = None) -> int:
        """Total degree (or degree in ``var``); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.index(var)
        return max(e[i] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(self.ring.gens[i] for i in sorted(used))

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_form(self) -> "Polynomial":
        return self.homogeneous_part(self.degree())

    def leading_term(self):
        """(exponent, coeff) of the grlex-largest term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coefficients_in(self, var: str):
        """Split as sum_k c_k * var^k; returns {k: c_k} with c_k free of var."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1 :]
            out.setdefault(k, {})[rest] = c
        return {k: Polynomial(self.ring, t) for k, t in out.items()}

    def univariate_coeffs(self, var: str):
        """Dense coefficient list (low to high) for a polynomial in one variable."""
        i = self.ring.index(var)
        if any(k for e in self.terms for j, k in enumerate(e) if j != i):
            raise ValueError(f"{self} is not univariate in {var}")
        d = self.degree(var)
        out = [self.ring.field.zero] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    # -- transformations --------------------------------------------------
    def substitute(self, assignment, ring: PolyRing | None = None) -> "Polynomial":
        """Compose: replace each variable by a polynomial (in ``ring``).

        Variables missing from ``assignment`` are kept as themselves, which
        requires them to exist in the target ring.
        """
        target = ring
        if target is None:
            for v in assignment.values():
                if isinstance(v, Polynomial):
                    target = v.ring
                    break
            else:
                target = self.ring
        images = []
        for g in self.ring.gens:
            if g in assignment:
                images.append(target.coerce(assignment[g]))
            else:
                images.append(target.gen(g))
        cache = [dict() for _ in images]

        def power(i, k):
            got = cache[i].get(k)
            if got is None:
                got = images[i] ** k
                cache[i][k] = got
            return got

        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, values):
        """Evaluate at field elements (or anything supporting + and *)."""
        vals = [values[g] for g in self.ring.gens] if isinstance(values, dict) else list(values)
        acc = None
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            acc = t if acc is None else acc + t
        return acc if acc is not None else self.ring.field.zero

    def diff(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1 :]
                out[ne] = c * k
        return Polynomial(self.ring, out)

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-express in a ring whose variables include all those used here."""
        idx = []
        for i, g in enumerate(self.ring.gens):
            idx.append(ring.index(g) if g in ring.gens else None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise RingMismatch(f"variable {self.ring.gens[i]} missing from target")
                    ne[idx[i]] = k
            out[tuple(ne)] = ring.field(c)
        return Polynomial(ring, out)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if the remainder is nonzero."""
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divmod(self, other: "Polynomial"):
        """Multivariate division by one divisor in grlex order."""
        o = self._other(other)
        if not o:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = o.leading_term()
        q = {}
        r = {}
        p = dict(self.terms)
        inv = self.ring.field.one / lc
        while p:
            e = max(p, key=_grlex_key)
            c = p[e]
            if all(a >= b for a, b in zip(e, le)):
                m = tuple(a - b for a, b in zip(e, le))
                f = c * inv
                q[m] = q.get(m, self.ring.field.zero) + f
                for oe, oc in o.terms.items():
                    ne = tuple(a + b for a, b in zip(m, oe))
                    v = p.get(ne, self.ring.field.zero) - f * oc
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
            else:
                r[e] = c
                del p[e]
        return Polynomial(self.ring, q), Polynomial(self.ring, r)

    def monomial_content(self):
        """Exponent-wise minimum over the support."""
        if not self.terms:
            return (0,) * self.ring.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def shift_down(self, exps) -> "Polynomial":
        return Polynomial(
            self.ring, {tuple(a - b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        )

    # -- text -------------------------------------------------------------
    def to_text(self) -> str:
        fmt = self.ring.field.format
        terms = []
        for e, c in self.sorted_terms():
            parts = []
            for g, k in zip(self.ring.gens, e):
                if k == 1:
                    parts.append(g)
                elif k > 1:
                    parts.append(f"{g}^{k}")
            terms.append((c, "*".join(parts)))
        return _join_terms(terms, lambda c: _coeff_text(fmt, c))


def _coeff_text(fmt, c):
    s = fmt(c)
    if isinstance(c, Fraction):
        return s
    # compound coefficients need brackets to survive re-parsing
    if any(ch in s[1:] for ch in "+-/") and not _enclosed(s):
        return f"({s})"
    return s


def _enclosed(s):
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(s) - 1:
            return False
    return True


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatch("mismatched variable context")
    return a * b


def substitute(p: Polynomial, assignment, ring: PolyRing | None = None) -> Polynomial:
    return p.substitute(assignment, ring)


def product(polys, ring: PolyRing) -> Polynomial:
    return reduce(lambda a, b: a * b, polys, ring.one())
