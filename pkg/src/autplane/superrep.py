"""The representation rho_N of SAut_0^{<n} on (L(N) + L(N-1) eps) (x) K[z].

Basis of the (2N+1)-dimensional space: ``x^i y^(N-i)`` for i = 0..N followed
by ``x^i y^(N-1-i) eps`` for i = 0..N-1.  The odd operator is
``eta = x d/deps + eps d/dy``; ``eta^2`` is the raising operator ``x d/dy``.

Linear maps act by ``(g.P)(x, y, eps) = P(g^-1 (x, y), eps)``; ``eps`` is
SL(2)-invariant.  An elementary ``(x, y + f(x))`` goes to
``exp(z * eta * f(eta))``, and a letter in direction delta is transported
from delta_0 by the fixed matrix ``gamma_delta``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd

from .exactfield import QQ, CharacteristicError, PolyMatrix, PolyRing, exp_nilpotent, zring
from .planeaut import (
    Direction,
    MixedWord,
    conjugate_letter,
    letter_ring,
    mat,
    mat_det,
    mat_id,
    mat_inv,
    random_scalar,
)


class DegreeOutOfRange(ValueError):
    pass


class DivisibilityViolated(ValueError):
    pass


def lcm_upto(n: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out = out * k // gcd(out, k)
    return out


class SuperSpace:
    def __init__(self, N: int, field=QQ):
        if N < 1:
            raise ValueError("N must be positive")
        if field.characteristic != 0:
            raise CharacteristicError("rho_N is only defined in characteristic 0")
        self.N = N
        self.field = field
        self.ring = PolyRing(field, ("x", "y", "eps"), odd=("eps",))
        self.zring = zring(field)
        x, y, e = self.ring.gens_polys()
        self.basis = [x**i * y ** (N - i) for i in range(N + 1)]
        self.basis += [x**i * y ** (N - 1 - i) * e for i in range(N)]
        self._index = {}
        for j, b in enumerate(self.basis):
            (exp,) = b.terms
            self._index[exp] = j

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, P):
        """Coordinates of a polynomial in the span of the basis."""
        out = [self.field.zero] * self.dim
        for e, c in P.terms.items():
            j = self._index.get(e)
            if j is None:
                raise ValueError(f"{P} is not in the span of the basis")
            out[j] = c
        return out

    def vector(self, P):
        return [self.zring.const(c) for c in self.coords(P)]

    def operator_matrix(self, op) -> PolyMatrix:
        cols = [self.coords(op(b)) for b in self.basis]
        n = self.dim
        return PolyMatrix(self.zring, [[cols[j][i] for j in range(n)] for i in range(n)])

    def eta(self, P):
        x = self.ring.gen("x")
        e = self.ring.gen("eps")
        return x * P.diff("eps") + e * P.diff("y")

    def line(self, d: Direction):
        """(b x - a y)^N, spanning L_delta."""
        x, y = self.ring.gen("x"), self.ring.gen("y")
        return (x.scale(d.b) - y.scale(d.a)) ** self.N


@lru_cache(maxsize=None)
def _space(N, field):
    return SuperSpace(N, field)


def eta_matrix(N: int, field=QQ) -> PolyMatrix:
    V = _space(N, field)
    return V.operator_matrix(V.eta)


def e_matrix(N: int, field=QQ) -> PolyMatrix:
    V = _space(N, field)
    x = V.ring.gen("x")
    return V.operator_matrix(lambda P: x * P.diff("y"))


def rep_linear(N: int, g, field=QQ) -> PolyMatrix:
    g = mat(field, g)
    if mat_det(g) != field.one:
        raise ValueError("rep_linear needs a determinant-one matrix")
    return _rep_linear_cached(N, g, field)


@lru_cache(maxsize=4096)
def _rep_linear_cached(N, g, field):
    V = _space(N, field)
    gi = mat_inv(g)
    x, y = V.ring.gen("x"), V.ring.gen("y")
    sub = {
        "x": x.scale(gi[0][0]) + y.scale(gi[0][1]),
        "y": x.scale(gi[1][0]) + y.scale(gi[1][1]),
    }
    return V.operator_matrix(lambda P: P.substitute(sub))


def _letter_coeffs(f):
    return {e[0]: c for e, c in f.terms.items()}


def rep_elementary(N: int, f, field=QQ) -> PolyMatrix:
    """exp(z * eta * f(eta)) for the elementary map (x, y + f(x))."""
    if f and (f.constant_coeff() or f.coeff((1,))):
        raise ValueError("f must lie in t^2 K[t]")
    return _rep_elementary_cached(N, f, field)


@lru_cache(maxsize=4096)
def _rep_elementary_cached(N, f, field):
    V = _space(N, field)
    eta = eta_matrix(N, field)
    n = V.dim
    acc = PolyMatrix.zero(n, V.zring)
    power = PolyMatrix.identity(n, V.zring)
    coeffs = _letter_coeffs(f)
    top = max(coeffs, default=0)
    powers = {}
    for k in range(top + 2):
        powers[k + 1] = power @ eta
        power = powers[k + 1]
    for k, c in coeffs.items():
        acc = acc + powers[k + 1].scale(c)
    z = V.zring.gen("z")
    return exp_nilpotent(acc.scale(z))


def gamma_for(d: Direction, field=QQ):
    """SL(2) matrix sending delta_0 = (0;1) to d: [[0, 1], [-1, b]] or identity."""
    if d.is_zero():
        return mat_id(field)
    return mat(field, ((0, 1), (-1, d.b)))


def check_word(N: int, w: MixedWord, n: int | None = None):
    for _, f in w.letters:
        d = f.degree()
        if n is not None and d >= n:
            raise DegreeOutOfRange(f"letter degree {d} is not below n={n}")
        for k in _letter_coeffs(f):
            if (2 * N) % (k + 1):
                raise DivisibilityViolated(f"{k + 1} does not divide 2N={2 * N}")
    if n is not None and (2 * N) % lcm_upto(n):
        raise DivisibilityViolated(f"lcm(1..{n}) does not divide 2N={2 * N}")


def rep_letter(N: int, d: Direction, f, field=QQ) -> PolyMatrix:
    g = gamma_for(d, field)
    d0, f0 = conjugate_letter(mat_inv(g), d, f)
    assert d0.is_zero()
    core = rep_elementary(N, f0, field)
    if d.is_zero():
        return core
    return rep_linear(N, g, field) @ core @ rep_linear(N, mat_inv(g), field)


def rep_word(N: int, w: MixedWord, n: int | None = None) -> PolyMatrix:
    field = w.field
    check_word(N, w, n)
    out = rep_linear(N, w.s, field)
    for d, f in w.letters:
        out = out @ rep_letter(N, d, f, field)
    return out


# ---------------------------------------------------------------------------
# ping-pong


def vector_hdc(vec):
    deg = max(v.degree() for v in vec)
    if deg < 0:
        return None, -1
    return [v.coeff((deg,)) for v in vec], deg


def in_line(N: int, vec_const, d: Direction, field=QQ) -> bool:
    """Is the constant vector a nonzero multiple of (b x - a y)^N?"""
    V = _space(N, field)
    target = V.coords(V.line(d))
    if not any(vec_const):
        return False
    j = next(i for i, c in enumerate(target) if c)
    ratio = vec_const[j] / target[j]
    return bool(ratio) and all(v == ratio * c for v, c in zip(vec_const, target))


def random_line_vector(rng, N, d: Direction, field=QQ, zdeg=2, height=3):
    """A vector polynomial in z whose top coefficient lies in L*_delta."""
    V = _space(N, field)
    Z = V.zring
    z = Z.gen("z")
    line = V.coords(V.line(d))
    top = rng.randint(0, zdeg)
    c = random_scalar(rng, field, height, nonzero=True)
    vec = [Z.const(v * c) * z**top for v in line]
    for i in range(V.dim):
        for k in range(top):
            vec[i] = vec[i] + (z**k).scale(random_scalar(rng, field, height))
    return vec


def pingpong_check(N, d, d_other, samples, field=QQ):
    """Check hdc(rho(tau) v) in L*_d for tau in F*_d and hdc(v) in L*_{d_other}.

    ``samples`` is a list of (f, vec) pairs; tau is the letter (d, f).
    """
    if d == d_other:
        raise ValueError("ping-pong needs two distinct directions")
    report = []
    for f, vec in samples:
        m = rep_letter(N, d, f, field)
        out = m.apply(vec)
        top, deg = vector_hdc(out)
        ok = top is not None and in_line(N, top, d, field)
        report.append({"f": f.to_text(), "degree": deg, "ok": ok})
    return report


def random_letter_poly(rng, n=3, field=QQ, height=3, N=None):
    T = letter_ring(field)
    t = T.gen("t")
    ks = [k for k in range(2, n) if N is None or (2 * N) % (k + 1) == 0]
    f = T.zero()
    while not f:
        for k in ks:
            if rng.random() < 0.7 or k == ks[-1]:
                f = f + (t**k).scale(random_scalar(rng, field, height))
    return f


def random_sl2(rng, field=QQ, height=3):
    """Random SL(2) element as a product of elementary matrices."""
    m = mat_id(field)
    from .planeaut import mat_mul

    for i in range(3):
        a = random_scalar(rng, field, height)
        e = ((1, 0), (a, 1)) if i % 2 == 0 else ((1, a), (0, 1))
        m = mat_mul(m, mat(field, e))
    return m


def random_word(rng: random.Random, length, field=QQ, n=3, height=3, N=None, linear=True):
    T = letter_ring(field)
    dirs = [Direction.zero(field), Direction.infinity(field)]
    letters = []
    for _ in range(length):
        if rng.random() < 0.5:
            d = rng.choice(dirs)
        else:
            d = Direction(field.one, random_scalar(rng, field, height))
        letters.append((d, random_letter_poly(rng, n, field, height, N)))
    s = random_sl2(rng, field, height) if linear else mat_id(field)
    return MixedWord(s, letters, field)
