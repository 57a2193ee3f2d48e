"""Multiplicative subgroups of Q(t_1, ..., t_m)^*: rank, transcendence degree,
good/bad classification, relation ideals, Newton polygons and the
linearity verdict engine for Aut_S of the plane.

Generators are handled as sympy expressions; unique factorization gives an
exponent profile (sign, primes, primitive irreducible polynomials) from which
all lattice questions are answered with exact integer linear algebra.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

import sympy as sp

from .exactfield import QQ, PolyRing, RationalFunction, resultant
from .planeaut import (
    BK,
    GL2,
    SL2,
    UK,
    DiagonalCyclic,
    FiniteList,
    PlusMinusId,
    SOq,
    Subgroup,
    Trivial,
    mat_mul,
)

SCHEMA = "autplane.verdict/1"


class NotBad(ValueError):
    pass


class ScopeExceeded(ValueError):
    pass


class EliminationFailed(ArithmeticError):
    pass


class ScalingViolated(AssertionError):
    pass


class UnsupportedDescriptor(ValueError):
    pass


class DegenerateSample(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# conversion


def to_sympy(value):
    """Accept ints, Fractions, strings, sympy expressions and Q(z) elements."""
    if isinstance(value, sp.Basic):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, RationalFunction):
        z = sp.Symbol(value.field.var)

        def dense(cs):
            return sum(to_sympy(c) * z**k for k, c in enumerate(cs))

        return dense(value.num) / dense(value.den)
    if isinstance(value, str):
        return sp.sympify(value.replace("^", "**"), rational=True)
    raise TypeError(f"cannot convert {value!r}")


# ---------------------------------------------------------------------------
# integer linear algebra


def _ext_gcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_with_transform(rows):
    """Row-style Hermite form H = U A with U unimodular; returns (H, U, rank)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if not H[i][c]:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = _ext_gcd(a, b)
            ka, kb = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * p + y * q for p, q in zip(Hr, Hi)]
            H[i] = [-kb * p + ka * q for p, q in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * p + y * q for p, q in zip(Ur, Ui)]
            U[i] = [-kb * p + ka * q for p, q in zip(Ur, Ui)]
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [p - q * s for p, s in zip(H[i], H[r])]
                U[i] = [p - q * s for p, s in zip(U[i], U[r])]
        r += 1
    return H, U, r


def rational_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sp.Matrix(rows).rank()


# ---------------------------------------------------------------------------
# lattice subgroups


def _profile(expr):
    """(sign, {('p', prime) | ('f', poly-key): exponent}) of a nonzero expression."""
    expr = sp.together(sp.nsimplify(expr, rational=True) if expr.is_Float else expr)
    if expr == 0:
        raise ZeroDivisionError("zero is not in the multiplicative group")
    num, den = sp.fraction(expr)
    sign = 1
    out = {}
    for part, s in ((num, 1), (den, -1)):
        coeff, facs = sp.factor_list(sp.expand(part))
        coeff = sp.Rational(coeff)
        if coeff < 0:
            sign = -sign
            coeff = -coeff
        for q, e in sp.factorint(coeff.p).items():
            out[("p", int(q))] = out.get(("p", int(q)), 0) + s * e
        for q, e in sp.factorint(coeff.q).items():
            out[("p", int(q))] = out.get(("p", int(q)), 0) - s * e
        for f, e in facs:
            f = sp.expand(f)
            lc = sp.Poly(f, *sorted(f.free_symbols, key=str)).LC()
            if lc < 0:
                f = -f
                if e % 2:
                    sign = -sign
            key = ("f", sp.srepr(f))
            out[key] = out.get(key, 0) + s * e
    return sign, {k: v for k, v in out.items() if v}


@dataclass
class LatticeSubgroup:
    generators: list
    profiles: list = dc_field(default_factory=list, repr=False)

    def __post_init__(self):
        self.generators = [sp.cancel(to_sympy(g)) for g in self.generators]
        self.profiles = [_profile(g) for g in self.generators]
        keys = sorted({k for _, p in self.profiles for k in p}, key=lambda k: (k[0] != "p", str(k)))
        self.keys = keys
        self.matrix = [[p.get(k, 0) for k in keys] for _, p in self.profiles]
        self.signs = [0 if s == 1 else 1 for s, _ in self.profiles]
        self.symbols = sorted(set().union(*(g.free_symbols for g in self.generators)) if self.generators else set(), key=str)

    @classmethod
    def of(cls, *gens):
        return cls(list(gens))

    def __repr__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def _hnf(self):
        if not self.generators:
            return [], [], 0
        rows = [r if r else [0] for r in self.matrix]
        return hermite_with_transform(rows)

    def rank(self) -> int:
        return rational_rank(self.matrix) if self.keys else 0

    def basis(self):
        """Independent elements spanning Lambda modulo its torsion {+-1} part."""
        H, U, r = self._hnf()
        return [self.product(U[i]) for i in range(r)]

    def kernel(self):
        """Integer relations among the generators, up to sign."""
        H, U, r = self._hnf()
        return [U[i] for i in range(r, len(U))]

    def product(self, exps):
        out = sp.Integer(1)
        for g, e in zip(self.generators, exps):
            if e:
                out *= g**e
        return sp.cancel(out)

    def independent_generators(self):
        gens = [g for g, row in zip(self.generators, self.matrix) if any(row)]
        if len(gens) == self.rank():
            return gens
        return self.basis()

    def is_constant(self):
        return not self.symbols


def rank(lam: LatticeSubgroup) -> int:
    return lam.rank()


def _jacobian_rank_at(jac, symbols, point):
    sub = dict(zip(symbols, point))
    rows = []
    for row in jac:
        vals = []
        for e in row:
            v = e.subs(sub)
            if v.has(sp.zoo, sp.oo, sp.nan) or not v.is_finite:
                raise DegenerateSample(point)
            vals.append(v)
        rows.append(vals)
    return sp.Matrix(rows).rank()


def trdeg(lam: LatticeSubgroup, seed=0, retries=5, report=None) -> int:
    """Rank of the Jacobian of the generators at random rational points."""
    syms = lam.symbols
    gens = [g for g in lam.generators if g.free_symbols]
    if not gens:
        return 0
    jac = [[sp.cancel(sp.diff(g, s)) for s in syms] for g in gens]
    rng = random.Random(seed)
    best = 0
    good_points = []
    attempts = 0
    while len(good_points) < 2 and attempts < retries + 2:
        attempts += 1
        point = [sp.Rational(rng.randint(-97, 97), rng.randint(1, 13)) for _ in syms]
        if any(g.subs(dict(zip(syms, point))) in (0, sp.zoo) for g in gens):
            continue
        try:
            r = _jacobian_rank_at(jac, syms, point)
        except DegenerateSample:
            continue
        best = max(best, r)
        good_points.append(point)
    if not good_points:
        raise DegenerateSample("every sample point was degenerate")
    if report is not None:
        report["points"] = [[str(c) for c in p] for p in good_points]
    return best


def classify(lam: LatticeSubgroup, seed=0) -> str:
    r = lam.rank()
    d = trdeg(lam, seed)
    assert d <= r, "trdeg exceeds rank"
    if d != r:
        return "Bad"
    basis = lam.basis()
    if len(basis) <= 6:
        for k in range(1, len(basis)):
            for sub in itertools.combinations(basis, k):
                s = LatticeSubgroup(list(sub))
                if trdeg(s, seed) != s.rank():
                    return "Bad"
    return "Good"


def d_divisors(lam: LatticeSubgroup) -> int:
    """2 if -1 lies in Lambda, else 1 (the roots of unity of Q(t..) are +-1)."""
    if any(s and not any(row) for s, row in zip(lam.signs, lam.matrix)):
        return 2
    for v in lam.kernel():
        if sum(e * s for e, s in zip(v, lam.signs)) % 2:
            return 2
    return 1


def torsion(lam: LatticeSubgroup) -> int:
    return d_divisors(lam)


# ---------------------------------------------------------------------------
# minimally bad subgroups


def _constant_part(lam: LatticeSubgroup):
    """Basis of the constants in Lambda (elements with no polynomial factors)."""
    poly_cols = [j for j, k in enumerate(lam.keys) if k[0] == "f"]
    const_cols = [j for j, k in enumerate(lam.keys) if k[0] == "p"]
    if not lam.generators:
        return []
    if poly_cols:
        rows = [[row[j] for j in poly_cols] for row in lam.matrix]
        _, U, r = hermite_with_transform(rows)
        combos = U[r:]
    else:
        combos = [[int(i == j) for j in range(len(lam.generators))] for i in range(len(lam.generators))]
    out = []
    for v in combos:
        c = lam.product(v)
        exps = [sum(e * lam.matrix[i][j] for i, e in enumerate(v)) for j in const_cols]
        if any(exps):
            out.append(c)
    return out


def minimally_bad(lam: LatticeSubgroup, seed=0) -> LatticeSubgroup:
    if classify(lam, seed) == "Good":
        raise NotBad(f"{lam} is good")
    consts = _constant_part(lam)
    if consts:
        return LatticeSubgroup([consts[0]])
    basis = lam.independent_generators()
    found = None
    for k in range(2, len(basis) + 1):
        for sub in itertools.combinations(basis, k):
            s = LatticeSubgroup(list(sub))
            if trdeg(s, seed) == k - 1:
                found = s
                break
        if found:
            break
    if found is None:
        raise NotBad("no sub-basis with rank = 1 + trdeg")
    return _saturate(found, seed)


def _saturate(lam: LatticeSubgroup, seed=0) -> LatticeSubgroup:
    """Replace Lambda by <lambda^alpha | alpha in Supp P_1> when X(Lambda) != Z^r."""
    try:
        rel = relation_gen(lam, 1)
    except (ScopeExceeded, EliminationFailed):
        return lam
    supp = [list(e) for e in rel.P.terms]
    H, _, r = hermite_with_transform(supp)
    gens = rel.generators
    new = [sp.cancel(sp.Mul(*[g**e for g, e in zip(gens, H[i])])) for i in range(r)]
    det = 1
    for i in range(r):
        det *= next(v for v in H[i] if v)
    if r == len(gens) and abs(det) == 1:
        return lam
    return LatticeSubgroup(new)


# ---------------------------------------------------------------------------
# relation ideals


@dataclass
class RelationGen:
    P: object
    n: int
    generators: list

    def vanishes(self) -> bool:
        sub = {
            sp.Symbol(v): g**self.n for v, g in zip(self.P.ring.gens, self.generators)
        }
        expr = poly_to_sympy(self.P)
        return sp.cancel(expr.subs(sub)) == 0

    def is_normalized(self) -> bool:
        return self.P.constant_coeff() == 1 and all(min(e) >= 0 for e in self.P.terms)


def relation_ring(r: int) -> PolyRing:
    return PolyRing(QQ, tuple(f"x{i + 1}" for i in range(r)) if r > 1 else ("x",))


def poly_to_sympy(P):
    syms = [sp.Symbol(v) for v in P.ring.gens]
    return sum(
        (to_sympy(c) * sp.Mul(*[s**k for s, k in zip(syms, e)]) for e, c in P.terms.items()),
        sp.Integer(0),
    )


def sympy_to_poly(expr, ring):
    syms = [sp.Symbol(v) for v in ring.gens]
    pol = sp.Poly(sp.expand(expr), *syms)
    return ring.from_dict({e: Fraction(int(c.p), int(c.q)) for e, c in pol.terms()})


def normalize_relation(P):
    P = P.shift_down(P.monomial_content())
    c = P.constant_coeff()
    if not c:
        raise EliminationFailed(f"{P.to_text()} has no constant term after removing monomials")
    return P / c


def relation_gen(lam: LatticeSubgroup, n: int) -> RelationGen:
    if n < 1:
        raise ValueError("n must be positive")
    gens = lam.independent_generators()
    r = len(gens)
    if r > 2 or len(lam.symbols) > 1:
        raise ScopeExceeded("relation_gen handles rank <= 2 over at most one variable")
    if r == 0:
        raise NotBad("trivial lattice has no relation ideal")
    R = relation_ring(r)
    if r == 1:
        (g,) = gens
        if g.free_symbols:
            raise NotBad(f"<{g}> is good: no algebraic relation")
        c = g**n
        x = R.gen(R.gens[0])
        P = R.one() - x.scale(1 / Fraction(str(c)))
        return RelationGen(normalize_relation(P), n, gens)
    (tsym,) = lam.symbols if lam.symbols else (sp.Symbol("t"),)
    tname = str(tsym)
    E = PolyRing(QQ, (tname,) + R.gens)
    eqs = []
    for g, v in zip(gens, R.gens):
        num, den = sp.fraction(sp.cancel(g))
        num_n = sympy_to_poly(sp.expand(num**n), PolyRing(QQ, (tname,)))
        den_n = sympy_to_poly(sp.expand(den**n), PolyRing(QQ, (tname,)))
        xv = E.gen(v)
        eqs.append(den_n.change_ring(E) * xv - num_n.change_ring(E))
    res = resultant(eqs[0], eqs[1], tname)
    if not res:
        raise EliminationFailed("resultant vanished identically")
    res_r = sympy_to_poly(poly_to_sympy(res), R)
    _, factors = sp.factor_list(poly_to_sympy(res_r))
    point = {sp.Symbol(v): g**n for v, g in zip(R.gens, gens)}
    for f, _ in factors:
        if sp.cancel(f.subs(point)) == 0:
            P = normalize_relation(sympy_to_poly(f, R))
            return RelationGen(P, n, gens)
    raise EliminationFailed("no factor of the resultant vanishes at the point")


# ---------------------------------------------------------------------------
# Newton polygons


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Vertices of the convex hull (counter-clockwise; 1-D and 2-D points)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts[0]) == 1:
        return [pts[0], pts[-1]] if len(pts) > 1 else pts
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass
class NewtonData:
    hull: list
    e: int


def newton(P) -> NewtonData:
    if len(P.ring.gens) > 2:
        raise ScopeExceeded("Newton polygons are computed in dimension <= 2")
    hull = convex_hull(P.terms)
    e = 0
    for a, b in itertools.combinations(hull, 2):
        for u, v in zip(a, b):
            e = gcd(e, u - v)
    return NewtonData(sorted(hull), max(e, 1))


def _divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def newton_scaling_check(lam: LatticeSubgroup, n: int, p1=None):
    rel1 = p1 or relation_gen(lam, 1)
    reln = rel1 if n == 1 else relation_gen(lam, n)
    r = len(rel1.generators)
    N1 = newton(rel1.P)
    Nn = newton(reln.P)
    target = sorted(Nn.hull)
    for f in _divisors(N1.e):
        scale = Fraction(n ** (r - 1), f)
        scaled = sorted(tuple(scale * c for c in v) for v in N1.hull)
        if scaled == target:
            return {
                "n": n,
                "f_n": f,
                "e": N1.e,
                "hull_1": N1.hull,
                "hull_n": Nn.hull,
                "P_n": reln.P.to_text(),
                "ok": True,
            }
    raise ScalingViolated(f"hull(P_{n}) = {Nn.hull} is no admissible multiple of {N1.hull}")


def disjointness_check(lam: LatticeSubgroup, ns):
    rels = {n: relation_gen(lam, n).P for n in ns}
    clashes = [(a, b) for a, b in itertools.combinations(ns, 2) if rels[a] == rels[b]]
    return {"ns": list(ns), "clashes": clashes, "ok": not clashes}


# ---------------------------------------------------------------------------
# verdict engine


class ExampleC(Subgroup):
    """SL(2, O[A][t]) with O the integers of Q(sqrt d); needs number-field units."""

    def __init__(self, d: int):
        self.d = d
        self.name = f"ExampleC(d={d})"
        self.field = QQ

    def contains(self, g):
        raise UnsupportedDescriptor("membership in SL(2, O[A][t]) is not modelled")


@dataclass
class Witness:
    delta: str
    rank: int
    trdeg: int
    torsion: int
    d: int
    note: str = ""

    def as_dict(self):
        out = {"delta": self.delta, "rank": self.rank, "trdeg": self.trdeg, "torsion": self.torsion, "d": self.d}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Verdict:
    result: str
    rule: str
    witnesses: list
    descriptor: str = ""
    note: str = ""

    def as_dict(self):
        out = {
            "schema": SCHEMA,
            "descriptor": self.descriptor,
            "result": self.result,
            "rule": self.rule,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)


LINEAR = "LinearOverField"
NONLINEAR = "NonlinearEvenOverRing"
UNKNOWN = "Unknown"

RULE_BAD = "Nonlinearity Criterion: some Lambda_delta is a bad subgroup"
RULE_FIRST = "First Linearity Criterion: every Lambda_delta is a torsion-free good subgroup"
RULE_SECOND = "Second Linearity Criterion: every Lambda_delta is good with bounded torsion (char 0)"
RULE_UNKNOWN = "outside the computable catalog"


def _witness(delta, lam: LatticeSubgroup, torsion_card=None, note=""):
    d = d_divisors(lam)
    return Witness(str(delta), lam.rank(), trdeg(lam), torsion_card if torsion_card else d, d, note)


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    return sp.sqrt(sp.Rational(q.numerator, q.denominator)).is_rational


def _rational_eigenlines(g):
    """(direction text, eigenvalue) for each K-rational eigenline of a 2x2 matrix."""
    a, b = g[0]
    c, d = g[1]
    tr = a + d
    disc = tr * tr - 4 * (a * d - b * c)
    if not _is_square(disc):
        return []
    root = Fraction(str(sp.sqrt(sp.Rational(disc.numerator, disc.denominator))))
    out = []
    for lam in {(tr + root) / 2, (tr - root) / 2}:
        if b or a != lam:
            u, v = b, lam - a
        elif c or d != lam:
            u, v = d - lam, -c
        else:
            return [("all", lam)]
        out.append((_direction_text(u, v), lam))
    return out


def _direction_text(u, v):
    if u == 0:
        return "d0"
    if v == 0:
        return "dinf"
    return f"(1;{Fraction(v) / Fraction(u)})"


def _from_lattice(lams, descriptor, torsion_cards=None):
    witnesses = []
    bad = False
    torsion_free = True
    for (delta, lam), tc in zip(lams, torsion_cards or [None] * len(lams)):
        w = _witness(delta, lam, tc)
        witnesses.append(w)
        if classify(lam) == "Bad":
            bad = True
        if w.torsion > 1:
            torsion_free = False
    if bad:
        return Verdict(NONLINEAR, RULE_BAD, witnesses, descriptor)
    if torsion_free:
        return Verdict(LINEAR, RULE_FIRST, witnesses, descriptor)
    return Verdict(LINEAR, RULE_SECOND, witnesses, descriptor)


def verdict(S: Subgroup) -> Verdict:
    name = repr(S)
    if isinstance(S, ExampleC):
        answer = "linear over a field extension" if S.d < 0 else "not linear, even over a ring"
        return Verdict(
            UNKNOWN,
            RULE_UNKNOWN,
            [],
            name,
            note=f"needs the unit group of the integers of Q(sqrt {S.d}); known answer: {answer}",
        )
    if isinstance(S, (Trivial, UK)):
        return _from_lattice([("d0", LatticeSubgroup([1]))], name)
    if isinstance(S, PlusMinusId):
        return _from_lattice([("d0", LatticeSubgroup([-1]))], name)
    if isinstance(S, (BK, SL2, GL2)):
        # the diagonal torus (or its Borel) fixes d0 with every eigenvalue in K^*
        return _from_lattice([("d0", LatticeSubgroup([2, 3, -1]))], name)
    if isinstance(S, SOq):
        disc = S.discriminant()
        if disc == 0 or _is_square(disc):
            # an isotropic or degenerate line carries the full K^*
            return _from_lattice([("isotropic", LatticeSubgroup([2, 3, -1]))], name)
        # a rational line fixed by g in SO(q) has eigenvalue l with l^2 = 1
        return _from_lattice([("any", LatticeSubgroup([-1]))], name)
    if isinstance(S, DiagonalCyclic):
        lam = LatticeSubgroup([S.lam])
        return _from_lattice([("d0", lam), ("dinf", lam)], name)
    if isinstance(S, FiniteList):
        groups = {}
        for g in S.elements:
            for delta, ev in _rational_eigenlines(g):
                groups.setdefault(delta, set()).add(ev)
        if not groups:
            groups["none"] = {Fraction(1)}
        lams = [(delta, LatticeSubgroup(sorted(evs) or [1])) for delta, evs in sorted(groups.items())]
        return _from_lattice(lams, name)
    raise UnsupportedDescriptor(f"no verdict rule for {name}")


def parse_descriptor(text: str, field=QQ) -> Subgroup:
    """Descriptor literals: Trivial, PM, U, B, SL2, GL2, SO(<form>), Diag(<l>), ExampleC(<d>)."""
    t = text.strip()
    simple = {
        "trivial": Trivial,
        "pm": PlusMinusId,
        "plusminusid": PlusMinusId,
        "u": UK,
        "u(k)": UK,
        "b": BK,
        "b(k)": BK,
        "sl2": SL2,
        "gl2": GL2,
    }
    low = t.lower().replace(" ", "")
    if low in simple:
        return simple[low](field)
    if low.startswith("so(") and low.endswith(")"):
        x, y = sp.symbols("x y")
        q = sp.Poly(to_sympy(t[3:-1]), x, y)
        if q.total_degree() != 2 or not q.is_homogeneous:
            raise UnsupportedDescriptor(f"{t}: not a binary quadratic form")
        co = lambda i, j: Fraction(str(q.coeff_monomial(x**i * y**j)))  # noqa: E731
        return SOq(co(2, 0), co(1, 1), co(0, 2), field)
    if low.startswith("diag(") and low.endswith(")"):
        return DiagonalCyclic(Fraction(str(to_sympy(t[5:-1]))), field)
    if low.startswith("examplec(") and low.endswith(")"):
        return ExampleC(int(t[9:-1].split("=")[-1]))
    raise UnsupportedDescriptor(f"unknown subgroup descriptor {text!r}")


def finite_group_from_generators(gens, field=QQ, limit=500):
    elems = {tuple(map(tuple, g)) for g in gens}
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = mat_mul(a, b)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
                    if len(elems) > limit:
                        raise ValueError("generated group is too large or infinite")
        frontier = nxt
    return FiniteList(elems, field)
