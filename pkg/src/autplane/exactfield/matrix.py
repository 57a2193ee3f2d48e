"""Square matrices over K[z], determinants, resultants and nilpotent exponentials."""

from __future__ import annotations

from math import factorial

from .fields import QQ
from .poly import Polynomial, PolyRing, RingMismatch


class NotNilpotent(ValueError):
    pass


class CharacteristicError(ValueError):
    pass


def zring(field=QQ, var="z") -> PolyRing:
    return PolyRing(field, (var,))


class PolyMatrix:
    """n x n matrix with entries in a polynomial ring (normally K[z])."""

    __slots__ = ("ring", "rows", "n")

    def __init__(self, ring: PolyRing, rows):
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square")
        self.ring = ring
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n, ring):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n, ring):
        return cls(ring, [[0] * n for _ in range(n)])

    @classmethod
    def from_constants(cls, rows, ring):
        return cls(ring, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.ring != self.ring or other.n != self.n:
            raise RingMismatch("matrix shape or ring mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, o.rows)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMatrix(self.ring, [[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = self.ring.coerce(c)
        return PolyMatrix(self.ring, [[a * c for a in r] for r in self.rows])

    def __matmul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        n = self.n
        cols = list(zip(*o.rows))
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    __mul__ = __matmul__

    def __pow__(self, k: int):
        out = PolyMatrix.identity(self.n, self.ring)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, vec):
        """Matrix times a column vector of polynomials."""
        vec = [self.ring.coerce(v) for v in vec]
        return [sum((a * v for a, v in zip(r, vec)), self.ring.zero()) for r in self.rows]

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def is_identity(self):
        return self == PolyMatrix.identity(self.n, self.ring)

    def degree(self) -> int:
        """Highest degree of any entry in the (single) ring variable."""
        return max((a.degree() for r in self.rows for a in r), default=-1)

    def coefficient(self, k: int) -> "PolyMatrix":
        """Constant matrix of the z^k coefficients."""
        (var,) = self.ring.gens
        return PolyMatrix(
            self.ring,
            [[self.ring.const(a.coeff((k,))) for a in r] for r in self.rows],
        )

    def hdc(self) -> "PolyMatrix":
        return self.coefficient(self.degree())

    def at_zero(self) -> "PolyMatrix":
        return self.coefficient(0)

    def det(self) -> Polynomial:
        return bareiss_det([list(r) for r in self.rows], self.ring)

    def inverse_unimodular(self) -> "PolyMatrix":
        """Inverse of a matrix whose determinant is a nonzero constant (adjugate)."""
        d = self.det()
        if not d.is_constant() or not d:
            raise ValueError("matrix is not invertible over the polynomial ring")
        n = self.n
        adj = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [self.rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i
                ]
                m = bareiss_det(minor, self.ring) if minor else self.ring.one()
                adj[j][i] = m if (i + j) % 2 == 0 else -m
        return PolyMatrix(self.ring, adj).scale(self.ring.field.one / d.constant_coeff())

    def entries_text(self):
        return [[a.to_text() for a in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(row) for row in self.entries_text())
        return f"[{body}]"


def bareiss_det(rows, ring: PolyRing) -> Polynomial:
    """Fraction-free determinant; every division is exact in the polynomial ring."""
    n = len(rows)
    if n == 0:
        return ring.one()
    m = [[ring.coerce(x) for x in r] for r in rows]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_coeff()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def sylvester_matrix(p: Polynomial, q: Polynomial, var: str):
    cp = p.coefficients_in(var)
    cq = q.coefficients_in(var)
    m = p.degree(var)
    n = q.degree(var)
    zero = p.ring.zero()
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + (m - k)] = cp.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + (n - k)] = cq.get(k, zero)
        rows.append(row)
    return rows


def resultant(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Res_var(p, q) as the Sylvester determinant; exact over K[other vars]."""
    if p.ring != q.ring:
        raise RingMismatch("mismatched variable context")
    if not p and not q:
        raise ValueError("resultant of two zero polynomials")
    if not p or not q:
        return p.ring.zero()
    m, n = p.degree(var), q.degree(var)
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    return bareiss_det(sylvester_matrix(p, q, var), p.ring)


def exp_nilpotent(m: PolyMatrix) -> PolyMatrix:
    """sum_k m^k / k!, exact; requires characteristic 0 and m nilpotent."""
    if m.ring.field.characteristic != 0:
        raise CharacteristicError("exp of a nilpotent matrix needs characteristic 0")
    n = m.n
    out = PolyMatrix.identity(n, m.ring)
    power = PolyMatrix.identity(n, m.ring)
    for k in range(1, n + 1):
        power = power @ m
        if power.is_zero():
            return out
        out = out + power.scale(m.ring.field.one / factorial(k))
    if not power.is_zero():
        raise NotNilpotent("matrix is not nilpotent")
    return out
