import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autplane.exactfield import QQ, CharacteristicError, PolyMatrix, PrimeField, zring
from autplane.planeaut import (
    Direction,
    MixedWord,
    conjugate_letter,
    letter_ring,
    mat,
    mat_id,
    mat_inv,
    mat_mul,
    word_conjugate,
    word_mul,
)
from autplane.superrep import (
    DegreeOutOfRange,
    DivisibilityViolated,
    SuperSpace,
    e_matrix,
    eta_matrix,
    gamma_for,
    in_line,
    lcm_upto,
    pingpong_check,
    random_line_vector,
    random_sl2,
    random_word,
    rep_elementary,
    rep_letter,
    rep_linear,
    rep_word,
    vector_hdc,
)

T = letter_ring(QQ)
t = T.gen("t")
Z = zring(QQ)
z = Z.gen("z")
D0 = Direction.zero(QQ)
DINF = Direction.infinity(QQ)


def test_dimension():
    assert SuperSpace(3).dim == 7 == 1 + lcm_upto(3)
    with pytest.raises(CharacteristicError):
        SuperSpace(2, PrimeField(5))


def test_eta_on_n1_basis():
    V = SuperSpace(1)
    y, x, e = V.basis  # y, x, eps
    assert [b.to_text() for b in V.basis] == ["y", "x", "eps"]
    assert not V.eta(x)
    assert V.eta(y) == e
    assert V.eta(e) == x
    m = eta_matrix(1)
    # columns: eta(y) = eps, eta(x) = 0, eta(eps) = x
    assert m.rows == PolyMatrix(Z, [[0, 0, 0], [0, 0, 1], [1, 0, 0]]).rows


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_eta_squares_to_raising_operator(N):
    eta = eta_matrix(N)
    assert eta @ eta == e_matrix(N)
    assert (eta ** (2 * N + 1)).is_zero()
    assert not (eta ** (2 * N)).is_zero()


def test_eta_top_power_on_y_to_the_n():
    V = SuperSpace(3)
    eta6 = eta_matrix(3) ** 6
    x, y = V.ring.gen("x"), V.ring.gen("y")
    out = eta6.apply(V.vector(y**3))
    assert out == V.vector((x**3).scale(6))


def test_rep_linear_examples():
    assert rep_linear(3, mat_id(QQ)).is_identity()
    lam = Fraction(5, 2)
    V = SuperSpace(3)
    g = mat(QQ, ((lam, 0), (0, 1 / lam)))
    x = V.ring.gen("x")
    img = rep_linear(3, g).apply(V.vector(x**3))
    assert img == V.vector((x**3).scale(lam**-3))
    with pytest.raises(ValueError):
        rep_linear(3, mat(QQ, ((2, 0), (0, 1))))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_rep_linear_multiplicative(seed):
    rng = random.Random(seed)
    g, h = random_sl2(rng), random_sl2(rng)
    assert rep_linear(2, g) @ rep_linear(2, h) == rep_linear(2, mat_mul(g, h))


def test_eps_is_invariant():
    rng = random.Random(1)
    V = SuperSpace(2)
    e = V.ring.gen("eps")
    for _ in range(5):
        g = random_sl2(rng)
        m = rep_linear(2, g)
        # x*eps and y*eps span L(1) eps, which is stable; eps-part never leaks into L(2)
        for b in V.basis[3:]:
            img = m.apply(V.vector(b))
            assert all(not c for c in img[:3])
    assert e * e == V.ring.zero()


def test_rep_elementary_closed_form():
    a = Fraction(-3, 2)
    eta = eta_matrix(3)
    expect = PolyMatrix.identity(7, Z) + (eta**3).scale(z.scale(a)) + (eta**6).scale((z * z).scale(a * a / 2))
    got = rep_elementary(3, (t**2).scale(a))
    assert got == expect
    assert got.degree() == 2
    assert got.hdc() == (eta**6).scale(a * a / 2)


def test_rep_elementary_additive():
    f, g = (t**2).scale(2), (t**2).scale(-5) + t**5
    assert rep_elementary(3, f) @ rep_elementary(3, g) == rep_elementary(3, f + g)
    assert rep_elementary(3, T.zero()).is_identity()
    with pytest.raises(ValueError):
        rep_elementary(3, t)


@pytest.mark.parametrize("d", [DINF, Direction(QQ.one, QQ.one), Direction(QQ.one, Fraction(-2, 3))])
def test_gamma_moves_d0(d):
    g = gamma_for(d)
    assert g[0][0] * g[1][1] - g[0][1] * g[1][0] == 1
    assert Direction(g[0][1], g[1][1]) == d


def test_b_equivariance_of_elementary_part():
    rng = random.Random(4)
    for _ in range(10):
        lam = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        b = mat(QQ, ((1 / lam, 0), (Fraction(rng.randint(-3, 3)), lam)))
        f = (t**2).scale(rng.randint(-2, 2) or 1)
        d, fb = conjugate_letter(b, D0, f)
        assert d == D0
        lhs = rep_linear(3, b) @ rep_elementary(3, f) @ rep_linear(3, mat_inv(b))
        assert lhs == rep_elementary(3, fb)


def test_letter_independent_of_gamma_choice():
    rng = random.Random(9)
    for _ in range(8):
        d = Direction(QQ.one, Fraction(rng.randint(-3, 3)))
        f = (t**2).scale(rng.randint(-2, 2) or 1)
        lam = Fraction(rng.choice([-2, 2, 3]))
        alt = mat_mul(gamma_for(d), mat(QQ, ((1 / lam, 0), (rng.randint(-2, 2), lam))))
        d0, f0 = conjugate_letter(mat_inv(alt), d, f)
        assert d0 == D0
        other = rep_linear(3, alt) @ rep_elementary(3, f0) @ rep_linear(3, mat_inv(alt))
        assert other == rep_letter(3, d, f)


def test_rep_word_homomorphism_and_det():
    rng = random.Random(21)
    for _ in range(30):
        w1, w2 = random_word(rng, 2, N=3), random_word(rng, 2, N=3)
        a, b = rep_word(3, w1, 3), rep_word(3, w2, 3)
        assert rep_word(3, word_mul(w1, w2), 3) == a @ b
        assert a.det() == Z.one()
        assert a.at_zero() == rep_linear(3, w1.s)


def test_equivariance_under_sl2():
    rng = random.Random(13)
    for _ in range(10):
        g = random_sl2(rng)
        w = random_word(rng, 2, N=3)
        lhs = rep_word(3, word_conjugate(g, w), 3)
        rhs = rep_linear(3, g) @ rep_word(3, w, 3) @ rep_linear(3, mat_inv(g))
        assert lhs == rhs


def test_rep_word_preconditions():
    assert rep_word(3, MixedWord.identity(QQ), 3).is_identity()
    with pytest.raises(DegreeOutOfRange):
        rep_word(3, MixedWord.letter(D0, t**3), 3)
    with pytest.raises(DivisibilityViolated):
        rep_word(2, MixedWord.letter(D0, t**2))
    with pytest.raises(DivisibilityViolated):
        rep_word(2, MixedWord.identity(QQ), 3)


def test_pingpong_example():
    V = SuperSpace(3)
    y, x = V.ring.gen("y"), V.ring.gen("x")
    out = rep_elementary(3, t**2).apply(V.vector(y**3))
    top, deg = vector_hdc(out)
    assert deg == 2
    assert top == V.coords((x**3).scale(3))
    assert in_line(3, top, D0)
    assert not in_line(3, top, DINF)


def test_pingpong_random():
    rng = random.Random(17)
    dirs = [D0, DINF, Direction(QQ.one, QQ.one), Direction(QQ.one, Fraction(1, 2))]
    for _ in range(10):
        d, d2 = rng.sample(dirs, 2)
        samples = []
        for _ in range(3):
            f = (t**2).scale(rng.randint(-3, 3) or 1)
            samples.append((f, random_line_vector(rng, 3, d2)))
        assert all(r["ok"] for r in pingpong_check(3, d, d2, samples))
    with pytest.raises(ValueError):
        pingpong_check(3, D0, D0, [])


def test_nontrivial_words_have_nontrivial_images():
    rng = random.Random(2)
    for _ in range(20):
        w = random_word(rng, rng.randint(1, 3), N=3, linear=False)
        if w.letters:
            assert not rep_word(3, w, 3).is_identity()
