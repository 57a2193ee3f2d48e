import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from autplane.exactfield import QQ, PolyMatrix, zring
from autplane.nagao import (
    LinearPartNotInU,
    NontrivialLinearPart,
    e_delta,
    embed_aut1,
    embed_autU,
    is_congruent_identity,
    letter_matrix,
    psi,
    reduced_words,
    verify_free,
)
from autplane.planeaut import Direction, MixedWord, letter_ring, mat, mat_id, word_inverse, word_mul

T = letter_ring(QQ)
t = T.gen("t")
Z = zring(QQ)
z = Z.gen("z")
D0 = Direction.zero(QQ)
DINF = Direction.infinity(QQ)
DIRS = [D0, DINF, Direction(QQ.one, QQ.one), Direction(QQ.one, Fraction(-1, 2))]
ZS = sp.Symbol("z")


def sym_matrix(m):
    return sp.Matrix([[sp.sympify(e.to_text().replace("^", "**"), rational=True, locals={"z": ZS}) for e in r] for r in m.rows])


def sym_letter(d, f):
    a, b = sp.Rational(str(d.a)), sp.Rational(str(d.b))
    g = sp.Add(*[sp.Rational(str(c)) * ZS ** (e[0] - 1) for e, c in f.terms.items()])
    return sp.eye(2) + g * sp.Matrix([[a], [b]]) * sp.Matrix([[b, -a]])


def test_single_letters():
    assert letter_matrix(D0, t**2) == PolyMatrix(Z, [[1, 0], [z, 1]])
    assert letter_matrix(DINF, t**2) == PolyMatrix(Z, [[1, -z], [0, 1]])
    assert psi(t**3 - (t**2).scale(2)) == z**2 - z.scale(2)


@pytest.mark.parametrize("d", DIRS)
def test_e_delta_is_square_zero_rank_one(d):
    e = sp.Matrix([[sp.Rational(str(c)) for c in r] for r in e_delta(d)])
    assert e * e == sp.zeros(2)
    assert e.rank() == 1


def _random_aut1(rng, length):
    letters = []
    for _ in range(length):
        f = (t**2).scale(rng.randint(-3, 3) or 1) + (t**3).scale(rng.randint(-1, 1))
        letters.append((rng.choice(DIRS), f))
    return MixedWord(mat_id(QQ), letters, QQ)


def test_embedding_matches_sympy_product():
    rng = random.Random(7)
    for _ in range(20):
        w = _random_aut1(rng, rng.randint(1, 4))
        expect = sp.eye(2)
        for d, f in w.letters:
            expect = expect * sym_letter(d, f)
        assert sp.expand(sym_matrix(embed_aut1(w)) - expect) == sp.zeros(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_aut1_homomorphism(seed):
    rng = random.Random(seed)
    w1, w2 = _random_aut1(rng, rng.randint(0, 3)), _random_aut1(rng, rng.randint(0, 3))
    m1 = embed_aut1(w1)
    assert embed_aut1(word_mul(w1, w2)) == m1 @ embed_aut1(w2)
    assert m1.det() == Z.one()
    assert is_congruent_identity(m1)
    assert (embed_aut1(word_inverse(w1)) @ m1).is_identity()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(-3, 3), st.integers(-3, 3))
def test_autU_homomorphism(seed, a1, a2):
    rng = random.Random(seed)
    w1 = _random_aut1(rng, rng.randint(0, 2))
    w2 = _random_aut1(rng, rng.randint(0, 2))
    w1 = MixedWord(mat(QQ, ((1, 0), (a1, 1))), w1.letters, QQ)
    w2 = MixedWord(mat(QQ, ((1, 0), (a2, 1))), w2.letters, QQ)
    m1 = embed_autU(w1)
    assert embed_autU(word_mul(w1, w2)) == m1 @ embed_autU(w2)
    assert m1.det() == Z.one()


def test_linear_part_image():
    w = MixedWord(mat(QQ, ((1, 0), (5, 1))), (), QQ)
    assert embed_autU(w) == PolyMatrix(Z, [[1, 0], [5, 1]])


def test_errors():
    with pytest.raises(NontrivialLinearPart):
        embed_aut1(MixedWord(mat(QQ, ((1, 0), (1, 1))), (), QQ))
    with pytest.raises(LinearPartNotInU):
        embed_autU(MixedWord(mat(QQ, ((1, 1), (0, 1))), (), QQ))
    with pytest.raises(LinearPartNotInU):
        embed_autU(MixedWord(mat(QQ, ((2, 0), (0, Fraction(1, 2)))), (), QQ))
    with pytest.raises(ValueError):
        verify_free(5, [1])


def test_reduced_word_count():
    # 2 directions, 2 coefficients: 4 first letters, then 2 choices each step
    words = list(reduced_words(3, [1, 2], [D0, DINF]))
    assert len(words) == 4 + 8 + 16


def test_verify_free_small_grid():
    rep = verify_free(3, [1, -1, 2], [D0, DINF, Direction(QQ.one, QQ.one)])
    assert rep["ok"], rep
    assert rep["distinct"] == rep["words"]
