"""Plane polynomial automorphisms.

Conventions.  A ``PlaneAut`` stores the images ``(p, q)`` of ``x`` and ``y``;
``compose(phi, psi)`` applies ``psi`` first.  A 2x2 matrix ``((a, b), (c, d))``
is the linear map ``(x, y) -> (a*x + b*y, c*x + d*y)``.

For a line ``delta`` with coordinates ``(a; b)`` the elementary letter
``(delta, f)`` is ``(x, y) -> (x, y) + f(b*x - a*y) * (a, b)`` with
``f`` in ``t^2 K[t]``.  A ``MixedWord`` ``(s, [(d1, f1), ..., (dm, fm)])``
stands for ``s o u1 o ... o um``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce

from .exactfield import QQ, Field, Polynomial, PolyRing, parse_tuple

# ---------------------------------------------------------------------------
# errors


class NotAnAutomorphism(ValueError):
    pass


class OriginNotFixed(ValueError):
    pass


class LinearPartNotInS(ValueError):
    pass


# ---------------------------------------------------------------------------
# 2x2 matrices over a field


def mat(field, rows):
    return tuple(tuple(field(v) for v in r) for r in rows)


def mat_id(field):
    return mat(field, ((1, 0), (0, 1)))


def mat_mul(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


def mat_det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat_inv(m):
    d = mat_det(m)
    if not d:
        raise ZeroDivisionError("singular matrix")
    return ((m[1][1] / d, -m[0][1] / d), (-m[1][0] / d, m[0][0] / d))


def mat_apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def mat_neg(m):
    return tuple(tuple(-v for v in r) for r in m)


# ---------------------------------------------------------------------------
# directions


class Direction:
    """A point of P^1_K in canonical coordinates (1; b) or (0; 1)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        if not a and not b:
            raise ValueError("(0;0) is not a point of P^1")
        if a:
            b = b / a
            a = a / a
        else:
            b = b / b
        self.a = a
        self.b = b

    @classmethod
    def of(cls, field, a, b):
        return cls(field(a), field(b))

    @classmethod
    def zero(cls, field=QQ):
        return cls(field(0), field(1))

    @classmethod
    def infinity(cls, field=QQ):
        return cls(field(1), field(0))

    def scale_from(self, a, b):
        """kappa with (a, b) = kappa * (self.a, self.b)."""
        return a / self.a if self.a else b / self.b

    def is_zero(self):
        return not self.a

    def is_infinity(self):
        return bool(self.a) and not self.b

    def linear_form(self, ring: PolyRing) -> Polynomial:
        """b*x - a*y, the coordinate transverse to the line."""
        x, y = ring.gen("x"), ring.gen("y")
        return x.scale(self.b) - y.scale(self.a)

    def __eq__(self, other):
        return isinstance(other, Direction) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.is_zero():
            return "d0"
        if self.is_infinity():
            return "dinf"
        return f"(1;{self.b})"


def act_on_direction(g, d: Direction) -> Direction:
    a, b = mat_apply(g, (d.a, d.b))
    return Direction(a, b)


# ---------------------------------------------------------------------------
# plane automorphisms


def plane_ring(field: Field = QQ) -> PolyRing:
    return PolyRing(field, ("x", "y"))


class PlaneAut:
    """A polynomial self-map (x, y) -> (p, q) of the plane."""

    __slots__ = ("p", "q", "ring")

    def __init__(self, p: Polynomial, q: Polynomial):
        if p.ring != q.ring:
            raise ValueError("coordinates live in different rings")
        if p.ring.gens != ("x", "y"):
            raise ValueError("plane automorphisms are written in x, y")
        self.p = p
        self.q = q
        self.ring = p.ring

    @property
    def field(self):
        return self.ring.field

    @classmethod
    def identity(cls, field=QQ):
        R = plane_ring(field)
        return cls(R.gen("x"), R.gen("y"))

    @classmethod
    def parse(cls, text: str, field=QQ):
        p, q = parse_tuple(text, plane_ring(field), arity=2)
        return cls(p, q)

    @classmethod
    def linear(cls, m, shift=(0, 0), field=None):
        field = field or _field_of(m)
        R = plane_ring(field)
        x, y = R.gen("x"), R.gen("y")
        return cls(
            x.scale(m[0][0]) + y.scale(m[0][1]) + R.const(shift[0]),
            x.scale(m[1][0]) + y.scale(m[1][1]) + R.const(shift[1]),
        )

    def __call__(self, x, y):
        return (self.p.evaluate((x, y)), self.q.evaluate((x, y)))

    def __eq__(self, other):
        return isinstance(other, PlaneAut) and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return self.to_text()

    def to_text(self):
        return f"({self.p.to_text()}, {self.q.to_text()})"

    def degree(self) -> int:
        return max(self.p.degree(), self.q.degree())

    def jacobian(self) -> Polynomial:
        return self.p.diff("x") * self.q.diff("y") - self.p.diff("y") * self.q.diff("x")

    def jacobian_is_constant(self) -> bool:
        j = self.jacobian()
        return bool(j) and j.is_constant()

    def translation(self):
        return (self.p.constant_coeff(), self.q.constant_coeff())

    def linear_part(self):
        """Differential at the origin."""
        p, q = self.p, self.q
        return (
            (p.coeff((1, 0)), p.coeff((0, 1))),
            (q.coeff((1, 0)), q.coeff((0, 1))),
        )

    def is_affine(self):
        return self.degree() <= 1

    def is_triangular(self):
        """Member of Elem(K): (c1*x + t, c2*y + f(x))."""
        p, q = self.p, self.q
        if p.degree("y") > 0 or p.degree() != 1:
            return False
        qy = q.coefficients_in("y")
        if set(qy) - {0, 1}:
            return False
        c2 = qy.get(1)
        return c2 is not None and c2.is_constant() and bool(c2)

    def is_linear(self):
        return self.is_affine() and not any(self.translation())


def compose(phi: PlaneAut, psi: PlaneAut) -> PlaneAut:
    """phi o psi (psi applied first)."""
    if phi.ring != psi.ring:
        raise ValueError("automorphisms over different fields")
    sub = {"x": psi.p, "y": psi.q}
    return PlaneAut(phi.p.substitute(sub), phi.q.substitute(sub))


def compose_all(maps, field=QQ) -> PlaneAut:
    maps = list(maps)
    if not maps:
        return PlaneAut.identity(field)
    return reduce(compose, maps)


def _field_of(m):
    v = m[0][0]
    from fractions import Fraction

    from .exactfield import ModP, PrimeField, RationalFunction

    if isinstance(v, Fraction) or isinstance(v, int):
        return QQ
    if isinstance(v, ModP):
        return PrimeField(v.p)
    if isinstance(v, RationalFunction):
        return v.field
    raise TypeError(f"cannot infer field from {v!r}")


def _affine_inverse(phi: PlaneAut) -> PlaneAut:
    m = phi.linear_part()
    mi = mat_inv(m)
    t = phi.translation()
    shift = mat_apply(mi, (-t[0], -t[1]))
    return PlaneAut.linear(mi, shift, phi.field)


def _triangular_inverse(phi: PlaneAut) -> PlaneAut:
    R = phi.ring
    x, y = R.gen("x"), R.gen("y")
    c1 = phi.p.coeff((1, 0))
    t = phi.p.constant_coeff()
    qy = phi.q.coefficients_in("y")
    c2 = qy[1].constant_coeff()
    f = qy.get(0, R.zero())
    new_x = (x - R.const(t)).scale(R.field.one / c1)
    new_y = (y - f.substitute({"x": new_x})).scale(R.field.one / c2)
    return PlaneAut(new_x, new_y)


def _swap(field):
    R = plane_ring(field)
    return PlaneAut(R.gen("y"), R.gen("x"))


# ---------------------------------------------------------------------------
# van der Kulk factorization


@dataclass(frozen=True)
class VdkFactorization:
    """Alternating affine / elementary factors, leftmost applied last."""

    factors: tuple  # of (kind, PlaneAut), kind in {"affine", "elem"}

    def compose(self) -> PlaneAut:
        return compose_all([f for _, f in self.factors], self.factors[0][1].field)

    def kinds(self):
        return [k for k, _ in self.factors]

    def elementary_degrees(self):
        return [f.degree() for k, f in self.factors if k == "elem"]

    def __len__(self):
        return len(self.factors)


def _leading_ratio(big: Polynomial, small: Polynomial, what: str):
    """mu, k with leading_form(big) = mu * leading_form(small)^k, or raise."""
    db, ds = big.degree(), small.degree()
    if ds <= 0 or db % ds:
        raise NotAnAutomorphism(f"degree {db} is not a multiple of {ds} ({what})")
    k = db // ds
    lb = big.leading_form()
    ls = small.leading_form() ** k
    e, c = lb.leading_term()
    mu = c / ls.coeff(e)
    if lb != ls.scale(mu):
        raise NotAnAutomorphism(f"leading forms are not proportional ({what})")
    return mu, k


def factor_vdk(phi: PlaneAut) -> VdkFactorization:
    """Degree-reduction factorization into affine and elementary maps."""
    if not phi.jacobian_is_constant():
        raise NotAnAutomorphism(f"Jacobian of {phi} is not a nonzero constant")
    field = phi.field
    R = phi.ring
    x, y = R.gen("x"), R.gen("y")
    p, q = phi.p, phi.q
    inverses = []  # L_j^{-1}, in order: phi = L_1^{-1} ... L_r^{-1} A
    while max(p.degree(), q.degree()) > 1:
        dp, dq = p.degree(), q.degree()
        if dp < 1 or dq < 1:
            raise NotAnAutomorphism("a coordinate is constant")
        if dp == dq:
            lp, lq = p.leading_form(), q.leading_form()
            e, c = lp.leading_term()
            ratio = lq.coeff(e) / c
            if lq == lp.scale(ratio):
                q = q - p.scale(ratio)
                inverses.append(("affine", PlaneAut(x, y + x.scale(ratio))))
                continue
            e, c = lq.leading_term()
            ratio = lp.coeff(e) / c
            if lp == lq.scale(ratio):
                p = p - q.scale(ratio)
                inverses.append(("affine", PlaneAut(x + y.scale(ratio), y)))
                continue
            raise NotAnAutomorphism("equal-degree leading forms are not proportional")
        if dq > dp:
            mu, k = _leading_ratio(q, p, "y-coordinate")
            q = q - (p**k).scale(mu)
            inverses.append(("elem", PlaneAut(x, y + (x**k).scale(mu))))
        else:
            mu, k = _leading_ratio(p, q, "x-coordinate")
            p = p - (q**k).scale(mu)
            sw = _swap(field)
            inverses.append(("affine", sw))
            inverses.append(("elem", PlaneAut(x, y + (x**k).scale(mu))))
            inverses.append(("affine", sw))
    last = PlaneAut(p, q)
    if not mat_det(last.linear_part()):
        raise NotAnAutomorphism("affine remainder is singular")
    inverses.append(("affine", last))
    return VdkFactorization(tuple(_canonical_factors(inverses, field)))


def _canonical_factors(items, field):
    items = [(k, f) for k, f in items]
    changed = True
    while changed:
        changed = False
        out = []
        for kind, f in items:
            if kind == "elem" and f.is_affine():
                kind = "affine"
                changed = True
            if out and out[-1][0] == kind:
                out[-1] = (kind, compose(out[-1][1], f))
                changed = True
            else:
                out.append((kind, f))
        # absorb triangular affine factors into a neighbouring elementary one
        for i, (kind, f) in enumerate(out):
            if kind == "affine" and f.is_triangular() and len(out) > 1:
                if i + 1 < len(out) and out[i + 1][0] == "elem":
                    out[i + 1] = ("elem", compose(f, out[i + 1][1]))
                else:
                    out[i - 1] = ("elem", compose(out[i - 1][1], f))
                del out[i]
                changed = True
                break
        identity = PlaneAut.identity(field)
        if len(out) > 1:
            for i, (kind, f) in enumerate(out):
                if f == identity:
                    del out[i]
                    changed = True
                    break
        items = out
    return items or [("affine", PlaneAut.identity(field))]


def invert(phi: PlaneAut) -> PlaneAut:
    fac = factor_vdk(phi)
    inv = []
    for kind, f in reversed(fac.factors):
        inv.append(_affine_inverse(f) if kind == "affine" else _triangular_inverse(f))
    return compose_all(inv, phi.field)


# ---------------------------------------------------------------------------
# letters and mixed words


def letter_ring(field=QQ) -> PolyRing:
    return PolyRing(field, ("t",))


def letter_aut(d: Direction, f: Polynomial) -> PlaneAut:
    """(x, y) -> (x, y) + f(b*x - a*y) * (a, b)."""
    R = plane_ring(f.ring.field)
    x, y = R.gen("x"), R.gen("y")
    g = f.substitute({"t": d.linear_form(R)}, R)
    return PlaneAut(x + g.scale(d.a), y + g.scale(d.b))


def conjugate_letter(g, d: Direction, f: Polynomial):
    """(d', f') with g o u_(d,f) o g^-1 = u_(d',f')."""
    a, b = mat_apply(g, (d.a, d.b))
    nd = Direction(a, b)
    kappa = nd.scale_from(a, b)
    T = f.ring
    t = T.gen("t")
    nf = f.substitute({"t": t.scale(kappa / mat_det(g))}, T).scale(kappa)
    return nd, nf


def _valid_letter_poly(f: Polynomial):
    return bool(f) and not f.constant_coeff() and not f.coeff((1,))


class MixedWord:
    """Reduced word s * u1 * ... * um in S |x *_delta E_delta(K)."""

    __slots__ = ("s", "letters", "field")

    def __init__(self, s, letters=(), field=None, reduce_=True):
        field = field or _field_of(s)
        self.field = field
        self.s = mat(field, s)
        letters = tuple((d, f) for d, f in letters)
        for d, f in letters:
            if not _valid_letter_poly(f):
                raise ValueError(f"letter polynomial {f} is not in t^2 K[t] \\ 0")
        self.letters = _reduce_letters(letters) if reduce_ else letters

    @classmethod
    def identity(cls, field=QQ):
        return cls(mat_id(field), (), field)

    @classmethod
    def letter(cls, d, f, field=None):
        field = field or f.ring.field
        return cls(mat_id(field), ((d, f),), field)

    def __eq__(self, other):
        return (
            isinstance(other, MixedWord) and self.s == other.s and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.s, self.letters))

    def __len__(self):
        return len(self.letters)

    def is_identity(self):
        return not self.letters and self.s == mat_id(self.field)

    def degree(self) -> int:
        out = 1
        for _, f in self.letters:
            out *= f.degree()
        return out

    def to_text(self):
        body = ",".join(f"({d!r},{f.to_text()})" for d, f in self.letters)
        if self.s == mat_id(self.field):
            return f"[{body}]"
        s = self.s
        return f"s=[[{s[0][0]},{s[0][1]}],[{s[1][0]},{s[1][1]}]] [{body}]"

    def __repr__(self):
        return f"MixedWord({self.to_text()})"


def _reduce_letters(letters):
    out = []
    for d, f in letters:
        if not f:
            continue
        if out and out[-1][0] == d:
            nf = out[-1][1] + f
            out.pop()
            if nf:
                out.append((d, nf))
        else:
            out.append((d, f))
    return tuple(out)


def word_mul(w1: MixedWord, w2: MixedWord) -> MixedWord:
    """(s U)(s' U') = s s' (s'^-1 U s') U'."""
    si = mat_inv(w2.s)
    moved = [conjugate_letter(si, d, f) for d, f in w1.letters]
    return MixedWord(mat_mul(w1.s, w2.s), tuple(moved) + w2.letters, w1.field)


def word_inverse(w: MixedWord) -> MixedWord:
    """(s U)^-1 = s^-1 (s U^-1 s^-1)."""
    inv_letters = [conjugate_letter(w.s, d, -f) for d, f in reversed(w.letters)]
    return MixedWord(mat_inv(w.s), inv_letters, w.field)


def word_conjugate(g, w: MixedWord) -> MixedWord:
    """g w g^-1 for a linear g."""
    gw = MixedWord(g, (), w.field)
    return word_mul(word_mul(gw, w), MixedWord(mat_inv(g), (), w.field))


def from_mixed_word(w: MixedWord) -> PlaneAut:
    maps = [PlaneAut.linear(w.s, field=w.field)]
    maps += [letter_aut(d, f) for d, f in w.letters]
    return compose_all(maps, w.field)


def to_mixed_word(phi: PlaneAut, S=None) -> MixedWord:
    """Normal form of an origin-fixing automorphism.

    Peels letters off the left: phi = v1 ... vm s, then moves s to the
    front with s^-1 v s, and reduces.
    """
    if any(phi.translation()):
        raise OriginNotFixed(f"{phi} does not fix the origin")
    if not phi.jacobian_is_constant():
        raise NotAnAutomorphism(f"Jacobian of {phi} is not a nonzero constant")
    field = phi.field
    T = letter_ring(field)
    t = T.gen("t")
    p, q = phi.p, phi.q
    peeled = []
    while max(p.degree(), q.degree()) > 1:
        D = max(p.degree(), q.degree())
        P, Q = p.homogeneous_part(D), q.homogeneous_part(D)
        if not P:
            d = Direction(field.zero, field.one)
            H = Q
        else:
            e, c = P.leading_term()
            ratio = Q.coeff(e) / c
            if Q != P.scale(ratio):
                raise NotAnAutomorphism("top-degree part is not along a single direction")
            d = Direction(field.one, ratio)
            H = P
        h = p.scale(d.b) - q.scale(d.a)
        mu, k = _leading_ratio_forms(H, h)
        g = h**k
        p = p - g.scale(mu * d.a)
        q = q - g.scale(mu * d.b)
        peeled.append((d, (t**k).scale(mu)))
    s = PlaneAut(p, q).linear_part()
    if not mat_det(s):
        raise NotAnAutomorphism("linear part is singular")
    if S is not None and not S.contains(s):
        raise LinearPartNotInS(f"linear part {s} is not in {S.name}")
    si = mat_inv(s)
    letters = [conjugate_letter(si, d, f) for d, f in peeled]
    return MixedWord(s, letters, field)


def _leading_ratio_forms(H: Polynomial, h: Polynomial):
    D = H.degree()
    e = h.degree()
    if e < 1 or D % e:
        raise NotAnAutomorphism("top form is not a power of the transverse form")
    k = D // e
    hk = h.leading_form() ** k
    te, c = H.leading_term()
    mu = c / hk.coeff(te)
    if H != hk.scale(mu):
        raise NotAnAutomorphism("top form is not a power of the transverse form")
    return mu, k


# ---------------------------------------------------------------------------
# subgroup descriptors


class Subgroup:
    name = "?"
    field = QQ

    def contains(self, g) -> bool:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Trivial(Subgroup):
    name = "Trivial"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        return g == mat_id(self.field)


class PlusMinusId(Subgroup):
    name = "PlusMinusId"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        i = mat_id(self.field)
        return g == i or g == mat_neg(i)


class UK(Subgroup):
    """Lower unipotent maps (x, y) -> (x, y + a*x)."""

    name = "U(K)"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        one = self.field.one
        return g[0][0] == one and not g[0][1] and g[1][1] == one


class BK(Subgroup):
    """Lower triangular matrices of determinant one, (l^-1 x, l y + t x)."""

    name = "B(K)"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        return not g[0][1] and mat_det(g) == self.field.one


class SL2(Subgroup):
    name = "SL2"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        return mat_det(g) == self.field.one


class GL2(Subgroup):
    name = "GL2"

    def __init__(self, field=QQ):
        self.field = field

    def contains(self, g):
        return bool(mat_det(g))


class SOq(Subgroup):
    """SO of the binary form A x^2 + B x y + C y^2."""

    def __init__(self, A, B, C, field=QQ):
        self.field = field
        self.A, self.B, self.C = field(A), field(B), field(C)
        self.name = f"SO({_qform_text(self.A, self.B, self.C)})"

    def gram(self):
        h = self.B / 2
        return ((self.A, h), (h, self.C))

    def discriminant(self):
        return self.B * self.B - 4 * self.A * self.C

    def contains(self, g):
        if mat_det(g) != self.field.one:
            return False
        gt = ((g[0][0], g[1][0]), (g[0][1], g[1][1]))
        return mat_mul(mat_mul(gt, self.gram()), g) == self.gram()


def _qform_text(A, B, C):
    R = plane_ring(QQ)
    x, y = R.gen("x"), R.gen("y")
    return ((x * x).scale(A) + (x * y).scale(B) + (y * y).scale(C)).to_text().replace(" ", "")


class FiniteList(Subgroup):
    """A finite group given by its full element list."""

    def __init__(self, matrices, field=QQ):
        self.field = field
        self.elements = frozenset(mat(field, m) for m in matrices)
        self.name = f"FiniteList({len(self.elements)})"

    def contains(self, g):
        return g in self.elements

    def is_closed(self):
        return all(mat_mul(a, b) in self.elements for a in self.elements for b in self.elements)


class DiagonalCyclic(Subgroup):
    """<diag(l, l^-1)>."""

    def __init__(self, lam, field=QQ, max_power=64):
        self.field = field
        self.lam = field(lam)
        self.max_power = max_power
        self.name = f"DiagonalCyclic({self.lam})"

    def contains(self, g):
        if g[0][1] or g[1][0] or mat_det(g) != self.field.one:
            return False
        return any(g[0][0] == self.lam**k for k in range(-self.max_power, self.max_power + 1))


# ---------------------------------------------------------------------------
# core probe


def core_probe(S: Subgroup, candidates, field=QQ):
    """Certificates that candidate linear maps are outside the core of S."""
    T = letter_ring(field)
    tau_f = T.gen("t") ** 2
    d0 = Direction.zero(field)
    tau = letter_aut(d0, tau_f)
    ident = mat_id(field)
    probes = [Direction.zero(field), Direction.infinity(field)]
    probes += [Direction.of(field, 1, k) for k in range(1, 6)]
    report = []
    for g in candidates:
        g = mat(field, g)
        entry = {"g": g, "in_S": S.contains(g)}
        if g == ident:
            entry.update(status="identity", detail="trivially in the core")
        elif g == mat_neg(ident):
            gl = PlaneAut.linear(g, field=field)
            conj = compose_all([gl, tau, PlaneAut.linear(mat_inv(g), field=field)], field)
            entry.update(
                status="witness",
                detail=f"tau^g = {conj.to_text()} != tau = {tau.to_text()}",
                conjugate=conj,
                moved=conj != tau,
            )
        else:
            moved = next((d for d in probes if act_on_direction(g, d) != d), None)
            if moved is None:
                entry.update(status="unresolved", detail="fixes every probe direction")
            else:
                entry.update(status="moves", detail=f"moves {moved!r}", direction=moved)
        report.append(entry)
    return report


# ---------------------------------------------------------------------------
# random generation (used by property checks and the CLI)


def random_scalar(rng: random.Random, field, height=3, nonzero=False):
    from fractions import Fraction

    while True:
        num = rng.randint(-height, height)
        den = rng.randint(1, height)
        if field.characteristic and den % field.characteristic == 0:
            continue
        v = field(Fraction(num, den))
        if v or not nonzero:
            return v


def random_elementary(rng, field=QQ, height=3, max_deg=3) -> PlaneAut:
    R = plane_ring(field)
    x, y = R.gen("x"), R.gen("y")
    deg = rng.randint(2, max_deg)
    f = R.zero()
    for k in range(deg + 1):
        f = f + (x**k).scale(random_scalar(rng, field, height))
    f = f + (x**deg).scale(random_scalar(rng, field, height, nonzero=True))
    while f.degree() < 2:
        f = f + (x**deg).scale(random_scalar(rng, field, height, nonzero=True))
    c1 = random_scalar(rng, field, height, nonzero=True)
    c2 = random_scalar(rng, field, height, nonzero=True)
    t = random_scalar(rng, field, height)
    return PlaneAut(x.scale(c1) + R.const(t), y.scale(c2) + f)


def random_affine(rng, field=QQ, height=3) -> PlaneAut:
    while True:
        m = tuple(tuple(random_scalar(rng, field, height) for _ in range(2)) for _ in range(2))
        if mat_det(m):
            break
    shift = (random_scalar(rng, field, height), random_scalar(rng, field, height))
    return PlaneAut.linear(m, shift, field)


def random_tame(rng, field=QQ, factors=6, height=3, max_deg=3) -> PlaneAut:
    maps = []
    for i in range(factors):
        maps.append(random_elementary(rng, field, height, max_deg) if i % 2 else random_affine(rng, field, height))
    return compose_all(maps, field)
