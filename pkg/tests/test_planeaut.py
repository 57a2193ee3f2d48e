import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from autplane.exactfield import QQ, PrimeField, RationalFunctions
from autplane.planeaut import (
    BK,
    SL2,
    UK,
    Direction,
    DiagonalCyclic,
    LinearPartNotInS,
    MixedWord,
    NotAnAutomorphism,
    OriginNotFixed,
    PlaneAut,
    SOq,
    compose,
    compose_all,
    conjugate_letter,
    core_probe,
    factor_vdk,
    from_mixed_word,
    invert,
    letter_aut,
    letter_ring,
    mat,
    mat_id,
    random_tame,
    to_mixed_word,
    word_conjugate,
    word_inverse,
    word_mul,
)

P = PlaneAut.parse
T = letter_ring(QQ)
t = T.gen("t")
D0 = Direction.zero(QQ)
DINF = Direction.infinity(QQ)
X, Y = sp.symbols("x y")


def sym(phi):
    return [sp.sympify(c.to_text().replace("^", "**"), rational=True) for c in (phi.p, phi.q)]


def test_compose_matches_substitution():
    S, Tm = P("(y, 2*x)"), P("(x, y + x^2)")
    assert compose(Tm, S) == P("(y, 2*x + y^2)")
    # oracle: substitute S into T with sympy
    tp, tq = sym(Tm)
    sp_, sq = sym(S)
    expect = [sp.expand(e.subs({X: sp_, Y: sq}, simultaneous=True)) for e in (tp, tq)]
    got = sym(compose(Tm, S))
    assert all(sp.expand(a - b) == 0 for a, b in zip(got, expect))


def test_identity_and_degree_product():
    u1, u2 = P("(x, y + x^2)"), P("(x + y^2, y)")
    phi = compose(u1, u2)
    assert compose(PlaneAut.identity(), phi) == phi
    assert phi == P("(x + y^2, y + (x + y^2)^2)")
    assert phi.degree() == 4


def test_invert_examples():
    assert invert(P("(x + y^2, y)")) == P("(x - y^2, y)")
    assert invert(P("(y, 2*x)")) == P("(y/2, x)")
    u1, u2 = P("(x, y + x^2)"), P("(x + y^2, y)")
    assert invert(compose(u1, u2)) == compose(invert(u2), invert(u1))


def test_factor_examples():
    fac = factor_vdk(P("(y, x + y^2)"))
    assert fac.kinds() == ["elem", "affine"]
    assert fac.factors[0][1] == P("(x, y + x^2)")
    assert fac.factors[1][1] == P("(y, x)")
    assert fac.compose() == P("(y, x + y^2)")
    lin = P("(2*x + y + 1, x - 3)")
    assert factor_vdk(lin).kinds() == ["affine"]
    with pytest.raises(NotAnAutomorphism):
        factor_vdk(P("(x, x*y)"))


def test_jacobian_checked_lazily():
    phi = P("(x, x*y)")
    assert not phi.jacobian_is_constant()


def _alternates(kinds):
    return all(a != b for a, b in zip(kinds, kinds[1:]))


@pytest.mark.parametrize("field", [QQ, PrimeField(5)], ids=["Q", "F5"])
def test_factor_round_trip_random(field):
    rng = random.Random(11)
    for _ in range(60):
        phi = random_tame(rng, field, factors=rng.randint(1, 6))
        fac = factor_vdk(phi)
        assert fac.compose() == phi
        assert _alternates(fac.kinds())
        prod = 1
        for d in fac.elementary_degrees():
            prod *= d
        assert prod == phi.degree()


def test_factor_over_rational_functions():
    K = RationalFunctions(QQ, ("z",))
    phi = compose(P("(x, y + z*x^2)", K), P("(y, x + 1)", K))
    assert factor_vdk(phi).compose() == phi
    assert compose(invert(phi), phi) == PlaneAut.identity(K)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_invert_is_two_sided(seed):
    phi = random_tame(random.Random(seed), QQ, factors=4, max_deg=2)
    ident = PlaneAut.identity()
    inv = invert(phi)
    assert compose(phi, inv) == ident
    assert compose(inv, phi) == ident


def test_mixed_word_examples():
    u1, u2 = P("(x, y + x^2)"), P("(x + y^2, y)")
    w = to_mixed_word(compose(u1, u2))
    assert w.s == mat_id(QQ)
    assert w.letters == ((D0, t**2), (DINF, t**2))
    assert to_mixed_word(u1).letters == ((D0, t**2),)
    with pytest.raises(OriginNotFixed):
        to_mixed_word(P("(x + 1, y)"))
    with pytest.raises(LinearPartNotInS):
        to_mixed_word(P("(2*x, y/2 + x^2)"), UK())


def test_direction_canonical_form():
    d = Direction(Fraction(2), Fraction(4))
    assert (d.a, d.b) == (1, 2) and repr(d) == "(1;2)"
    assert repr(Direction(Fraction(0), Fraction(5))) == "d0"
    assert repr(DINF) == "dinf"
    with pytest.raises(ValueError):
        Direction(Fraction(0), Fraction(0))


def test_letter_maps():
    assert letter_aut(D0, t**2) == P("(x, y + x^2)")
    assert letter_aut(DINF, t**2) == P("(x + y^2, y)")
    d = Direction(QQ.one, QQ.one)
    assert letter_aut(d, t**2) == P("(x + (x - y)^2, y + (x - y)^2)")


def test_torus_conjugation_weight():
    lam = Fraction(3)
    g = mat(QQ, ((1 / lam, 0), (0, lam)))
    d, f = conjugate_letter(g, D0, t**2)
    assert d == D0 and f == (t**2).scale(lam**3)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=4, max_size=4),
    st.sampled_from([D0, DINF, Direction(QQ.one, QQ.one), Direction(QQ.one, Fraction(-1, 2))]),
    st.integers(-3, 3).filter(bool),
)
def test_conjugation_rule_matches_composition(entries, d, c):
    m = mat(QQ, ((entries[0][0], entries[1][0]), (entries[2][0], entries[3][0])))
    if not (m[0][0] * m[1][1] - m[0][1] * m[1][0]):
        return
    f = (t**2).scale(c) + t**3
    g = PlaneAut.linear(m)
    lhs = compose_all([g, letter_aut(d, f), invert(g)])
    nd, nf = conjugate_letter(m, d, f)
    assert lhs == letter_aut(nd, nf)


def _random_word(rng, length, linear=True, cubic=True):
    dirs = [D0, DINF, Direction(QQ.one, QQ.one), Direction(QQ.one, Fraction(2))]
    letters = []
    for _ in range(length):
        f = (t**2).scale(rng.randint(-2, 2) or 1)
        if cubic:
            f = f + (t**3).scale(rng.randint(-1, 1))
        letters.append((rng.choice(dirs), f))
    s = mat(QQ, ((rng.randint(1, 3), rng.randint(-2, 2)), (0, 1))) if linear else mat_id(QQ)
    return MixedWord(s, letters, QQ)


def test_word_mul_agrees_with_composition():
    rng = random.Random(5)
    for _ in range(100):
        w1 = _random_word(rng, rng.randint(0, 2), cubic=False)
        w2 = _random_word(rng, rng.randint(0, 2), cubic=False)
        prod = word_mul(w1, w2)
        phi = compose(from_mixed_word(w1), from_mixed_word(w2))
        assert from_mixed_word(prod) == phi
        assert to_mixed_word(phi) == prod


def test_word_cancellation():
    a = MixedWord.letter(D0, t**2)
    b = MixedWord.letter(D0, -(t**2))
    assert word_mul(a, b).is_identity()
    c = MixedWord.letter(DINF, t**3)
    assert len(word_mul(a, c)) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 6))
def test_word_times_inverse_is_empty(seed, length):
    w = _random_word(random.Random(seed), length)
    assert word_mul(w, word_inverse(w)).is_identity()
    assert word_mul(word_inverse(w), w).is_identity()


def test_degree_multiplicativity_of_words():
    rng = random.Random(8)
    for _ in range(30):
        w = _random_word(rng, rng.randint(1, 3))
        assert from_mixed_word(w).degree() == w.degree()


def test_word_conjugate_is_conjugation():
    rng = random.Random(3)
    g = mat(QQ, ((2, 1), (1, 1)))
    for _ in range(10):
        w = _random_word(rng, 2)
        lhs = from_mixed_word(word_conjugate(g, w))
        G = PlaneAut.linear(g)
        assert lhs == compose_all([G, from_mixed_word(w), invert(G)])


def test_baumslag_solitar_relation():
    S, Tm = P("(y, 2*x)"), P("(x, y + x^2)")
    Si = invert(S)
    assert compose_all([Si, Si, Tm, S, S]) == compose(Tm, Tm)
    assert compose(S, S) == P("(2*x, 2*y)")


def test_subgroup_descriptors():
    assert UK().contains(mat(QQ, ((1, 0), (5, 1))))
    assert not UK().contains(mat(QQ, ((1, 1), (0, 1))))
    assert BK().contains(mat(QQ, ((2, 0), (7, Fraction(1, 2)))))
    assert SL2().contains(mat(QQ, ((2, 1), (1, 1))))
    rot = mat(QQ, ((0, -1), (1, 0)))
    assert SOq(1, 0, 1).contains(rot)
    assert not SOq(0, 1, 0).contains(rot)
    assert DiagonalCyclic(2).contains(mat(QQ, ((4, 0), (0, Fraction(1, 4)))))


def test_core_probe():
    rep = core_probe(SL2(), [((-1, 0), (0, -1)), ((1, 0), (0, 1)), ((2, 0), (0, Fraction(1, 2)))])
    assert rep[0]["status"] == "witness" and rep[0]["conjugate"] == P("(x, y - x^2)")
    assert rep[1]["status"] == "identity"
    assert rep[2]["status"] == "moves" and rep[2]["direction"] == Direction(QQ.one, QQ.one)


def test_parse_print_round_trip():
    rng = random.Random(2)
    for _ in range(20):
        phi = random_tame(rng, QQ, factors=3)
        assert P(phi.to_text()) == phi
