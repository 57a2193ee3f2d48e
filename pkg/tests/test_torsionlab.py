import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autplane.exactfield import GaloisField
from autplane.planeaut import PlaneAut, compose, compose_all, invert
from autplane.torsionlab import (
    FiniteGroup,
    FinitePerm,
    GroupTooLarge,
    NotNilpotent,
    bs_action,
    bs_relation_holds,
    build_EM,
    build_G,
    eval_word,
    expected_class,
    lower_central_series,
    nilpotency_class,
    parse_bs_word,
    separate,
    sum_product_check,
)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_bs_relation(p):
    assert bs_relation_holds(p)
    s, t = bs_action(p)
    # S^2 = 2 id, so sigma^2 is halving
    half = pow(2, -1, p)
    assert s**2 == FinitePerm.from_map(p, lambda x, y: (x * half, y * half))


def test_bs_action_pointwise():
    s, t = bs_action(5)
    assert t(1, 0) == (1, 1)
    assert s(2, 4) == (2, 2)  # (y/2, x)
    with pytest.raises(ValueError):
        bs_action(2)


def test_bs_relation_over_q():
    S, T = PlaneAut.parse("(y, 2*x)"), PlaneAut.parse("(x, y + x^2)")
    Si = invert(S)
    assert compose_all([Si, Si, T, S, S]) == compose(T, T)


def test_word_parsing():
    assert parse_bs_word("s t^2 S T^-1") == [("s", 1), ("t", 2), ("s", -1), ("t", 1)]
    with pytest.raises(ValueError):
        parse_bs_word("s x")
    assert eval_word("sS tT", 5).is_identity()


def test_separate():
    first, rep = separate("t", [3])
    assert first == 3 and rep[3]["witness"] == (1, 0)
    first, rep = separate("s t S T", [3, 5])
    assert first in (3, 5)
    # sigma^4 is multiplication by 1/4: trivial exactly when 4 = 1 mod p
    first, rep = separate("s^4", [3, 5])
    assert rep[3]["trivial"] and not rep[5]["trivial"] and first == 5
    # the defining relation is trivial everywhere
    first, rep = separate("s^2 t S^2 T^2", [3, 5, 7])
    assert first is None and all(r["trivial"] for r in rep.values())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["s", "t", "S", "T"]), max_size=8), st.sampled_from([3, 5, 7]))
def test_word_times_inverse_acts_trivially(letters, p):
    inverse = [c.swapcase() for c in reversed(letters)]
    assert eval_word(" ".join(letters + inverse) or "s S", p).is_identity()


def test_sum_product_manual_expansion():
    rep = sum_product_check(2, 2)
    # a^3 + b^3 + (a + b)^3 = a^2 b + a b^2 = ab(a + b) over F_2
    assert rep["ok"] and rep["sum"] == "a1^2*a2 + a1*a2^2"
    rep = sum_product_check(3, 1)
    assert rep["ok"] and rep["sum"] == "2*a^2"


@pytest.mark.parametrize("p,r,algebra", [(2, 1, "poly"), (2, 2, "poly"), (3, 1, "poly"), (3, 2, "poly"), (2, 2, "gf"), (3, 2, "gf"), (5, 1, "gf")])
def test_sum_product_exhaustive(p, r, algebra):
    rep = sum_product_check(p, r, algebra)
    assert rep["ok"] and rep["size"] == p**r
    if algebra == "gf":
        assert rep["sum"] == repr(-GaloisField(p, r).one)


def _upper_central_length(G):
    """Independent class count via the upper central series."""
    elems = list(G.elements)
    Z = {G.identity}
    length = 0
    while len(Z) < len(elems):
        nxt = {g for g in elems if all(G.commutator(g, h) in Z for h in G.gens)}
        if nxt == Z:
            return None
        Z = nxt
        length += 1
    return length


@pytest.mark.parametrize("p,r,order", [(2, 1, 8), (2, 2, 64), (3, 1, 81)])
def test_G_class(p, r, order):
    G = build_G(p, r)
    assert G.order == order
    c = nilpotency_class(G)
    assert c == expected_class(p, r) == 1 + (p - 1) * r
    assert _upper_central_length(G) == c
    assert G.check_axioms()


def test_G_too_large():
    with pytest.raises(GroupTooLarge):
        build_G(3, 2)


@pytest.mark.parametrize("p,r,cls", [(2, 1, 2), (2, 2, 3), (3, 1, 3)])
def test_EM_class(p, r, cls):
    G = build_EM(p, r)
    assert nilpotency_class(G) == cls == expected_class(p, r)
    assert _upper_central_length(G) == cls
    assert G.check_axioms()


def _perm_group(gens):
    mul = lambda a, b: tuple(a[i] for i in b)  # noqa: E731
    inv = lambda a: tuple(sorted(range(len(a)), key=lambda i: a[i]))  # noqa: E731
    return FiniteGroup(gens, mul, inv, tuple(range(len(gens[0]))), name="perm")


def test_symmetric_group_is_not_nilpotent():
    S3 = _perm_group([(1, 0, 2), (1, 2, 0)])
    assert S3.order == 6
    with pytest.raises(NotNilpotent):
        nilpotency_class(S3)
    assert len(lower_central_series(S3)[-1]) == 3


def test_abelian_and_dihedral():
    C = _perm_group([(1, 2, 3, 0), (3, 0, 1, 2)])
    assert C.is_abelian() and nilpotency_class(C) == 1
    D4 = _perm_group([(1, 2, 3, 0), (3, 2, 1, 0)])
    assert D4.order == 8 and nilpotency_class(D4) == 2


def test_group_axioms_on_all_builds():
    for G in (build_G(2, 1), build_EM(2, 2), _perm_group([p for p in itertools.permutations(range(4))][1:3])):
        assert G.check_axioms(samples=100, seed=1)
