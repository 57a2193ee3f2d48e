"""Exact coefficient fields.

Three kinds are supported: the rationals, prime fields F_p, and univariate
rational function fields K(z) over one of those.  A small Galois field
F_{p^r} is also provided for the finite-characteristic probes.

Field objects coerce Python ints/Fractions into their elements via
``field(x)``; elements support the usual arithmetic operators, so polynomial
code never needs to know which field it is working over.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import total_ordering


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Field:
    characteristic = 0
    name = "?"

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def format(self, c) -> str:
        return str(c)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class Rationals(Field):
    characteristic = 0
    name = "Q"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        if isinstance(x, RationalFunction) and x.is_constant():
            return x.constant_value()
        raise FieldError(f"cannot coerce {x!r} into Q")


QQ = Rationals()


@total_ordering
class ModP:
    """Element of F_p, stored as a reduced int."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        return ModP(self._lift(other), self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ModP(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __lt__(self, other):
        return self.v < self._lift(other)

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p) or p >= 2**31:
            raise FieldError(f"{p} is not a prime below 2^31")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def _key(self):
        return (self.p,)

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldError("mixed prime fields")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return ModP(x.numerator, self.p) / x.denominator
        if isinstance(x, int):
            return ModP(x, self.p)
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    def elements(self):
        return [ModP(i, self.p) for i in range(self.p)]


# -- univariate dense polynomials over a base field, used by K(z) ------------

def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _dadd(a, b):
    n = max(len(a), len(b))
    zero = 0
    return _trim((a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n))


def _dneg(a):
    return tuple(-c for c in a)


def _dmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _ddivmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = a[i + k] - c * y
        a = list(_trim(a))
    return _trim(q), _trim(a)


def _dgcd(a, b):
    while b:
        a, b = b, _ddivmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


class RationalFunction:
    """num/den in base[z]; den monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den", "field")

    def __init__(self, field, num, den=None, _reduced=False):
        base = field.base
        num = _trim(base(c) for c in num)
        den = _trim(base(c) for c in (den if den is not None else (1,)))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (base.one,)
        elif not _reduced:
            g = _dgcd(num, den)
            if len(g) > 1:
                num = _ddivmod(num, g)[0]
                den = _ddivmod(den, g)[0]
        lead = den[-1]
        if lead != base.one:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num = num
        self.den = den
        self.field = field

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        try:
            return self.field(other)
        except FieldError:
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.field, _dadd(self.num, o.num), self.den)
        return RationalFunction(
            self.field,
            _dadd(_dmul(self.num, o.den), _dmul(o.num, self.den)),
            _dmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, _dneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.field, _dmul(self.num, o.num), _dmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of 0 in K(z)")
        return RationalFunction(self.field, self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        return self.num[0] if self.num else self.field.base.zero

    def __call__(self, value):
        def ev(c):
            acc = self.field.base.zero
            for x in reversed(c):
                acc = acc * value + x
            return acc

        return ev(self.num) / ev(self.den)

    def __repr__(self):
        return self.field.format(self)


class RationalFunctions(Field):
    """base(var); nesting depth one, single variable."""

    def __init__(self, base: Field = QQ, vars=("z",)):
        vars = tuple(vars)
        if isinstance(base, RationalFunctions):
            raise FieldError("rational function fields nest at most once")
        if len(vars) != 1:
            raise FieldError("only univariate rational function fields are supported")
        self.base = base
        self.var = vars[0]
        self.vars = vars
        self.characteristic = base.characteristic
        self.name = f"{base.name}({self.var})"

    def _key(self):
        return (self.base, self.var)

    def __call__(self, x):
        if isinstance(x, RationalFunction):
            if x.field != self:
                raise FieldError("mixed rational function fields")
            return x
        return RationalFunction(self, (self.base(x),))

    def gen(self):
        return RationalFunction(self, (self.base.zero, self.base.one))

    def format(self, c) -> str:
        def dense(coeffs):
            terms = []
            for k in range(len(coeffs) - 1, -1, -1):
                a = coeffs[k]
                if not a:
                    continue
                mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
                terms.append((a, mono))
            return _join_terms(terms, self.base.format)

        if len(c.den) == 1:
            return dense(c.num) if c.num else "0"
        return f"({dense(c.num)})/({dense(c.den)})"


def _join_terms(terms, fmt):
    """Render [(coeff, monomial_text)] as a signed sum; '' monomial means 1."""
    if not terms:
        return "0"
    out = []
    for i, (a, mono) in enumerate(terms):
        s = fmt(a)
        neg = s.startswith("-") and "(" not in s
        if neg:
            s = s[1:]
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- small Galois fields -----------------------------------------------------

class GFElement:
    __slots__ = ("c", "field")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def _co(self, other):
        if isinstance(other, GFElement):
            return other
        if isinstance(other, (int, ModP, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return GFElement(self.field, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple((-a) % p for a in self.c))

    def __sub__(self, other):
        o = self._co(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, self.field._mul(self.c, o.c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of 0 in GF")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._co(other)
        return o if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __eq__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return False
        return self.c == o.c

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(ModP(self.c[0], self.field.p))
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return self.field.format(self)


class GaloisField(Field):
    """F_{p^r} = F_p[a]/(m(a)) with m the first monic irreducible found."""

    def __init__(self, p: int, r: int, gen_name: str = "a"):
        if not is_prime(p) or r < 1:
            raise FieldError("GaloisField needs a prime p and r >= 1")
        self.p = p
        self.r = r
        self.order = p**r
        self.characteristic = p
        self.gen_name = gen_name
        self.modulus = self._find_modulus()
        self.name = f"GF({p}^{r})"

    def _key(self):
        return (self.p, self.r)

    def _find_modulus(self):
        p, r = self.p, self.r
        if r == 1:
            return (0, 1)
        for tail in itertools.product(range(p), repeat=r):
            m = tuple(tail) + (1,)
            if m[0] == 0:
                continue
            if all(self._eval_poly(m, x) != 0 for x in range(p)) and self._irreducible(m):
                return m
        raise FieldError("no irreducible polynomial found")

    def _eval_poly(self, m, x):
        acc = 0
        for c in reversed(m):
            acc = (acc * x + c) % self.p
        return acc

    def _irreducible(self, m):
        p = self.p
        fp = PrimeField(p)
        mm = tuple(fp(c) for c in m)
        deg = len(m) - 1
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                f = tuple(fp(c) for c in tail) + (fp(1),)
                if not _ddivmod(mm, f)[1]:
                    return False
        return True

    def _mul(self, a, b):
        p, r = self.p, self.r
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        m = self.modulus
        for k in range(len(prod) - 1, r - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(r + 1):
                    prod[k - r + i] -= c * m[i]
        return tuple(v % p for v in prod[:r])

    def __call__(self, x):
        if isinstance(x, GFElement):
            return x
        if isinstance(x, ModP):
            x = x.v
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return self(x.numerator) / self(x.denominator)
        if isinstance(x, int):
            return GFElement(self, (x % self.p,) + (0,) * (self.r - 1))
        raise FieldError(f"cannot coerce {x!r} into {self.name}")

    def from_coeffs(self, c):
        c = tuple(v % self.p for v in c) + (0,) * (self.r - len(c))
        return GFElement(self, c[: self.r])

    def gen(self):
        return self.from_coeffs((0, 1))

    def elements(self):
        return [self.from_coeffs(c) for c in itertools.product(range(self.p), repeat=self.r)]

    def format(self, x) -> str:
        terms = []
        for k in range(self.r - 1, -1, -1):
            a = x.c[k]
            if a:
                mono = "" if k == 0 else (self.gen_name if k == 1 else f"{self.gen_name}^{k}")
                terms.append((a, mono))
        s = _join_terms(terms, str)
        return s if len(terms) <= 1 else f"({s})"


def field_from_spec(text: str) -> Field:
    """Parse the CLI field flag: Q, Fp:<p>, Qt (or Q(z))."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("Fp:") or t.startswith("F") and t[1:].isdigit():
        return PrimeField(int(t.split(":")[-1] if ":" in t else t[1:]))
    if t in ("Qt", "Qz", "Q(z)", "Q(t)"):
        return RationalFunctions(QQ, ("z",))
    raise FieldError(f"unknown field spec {text!r}")


def format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return repr(c)
