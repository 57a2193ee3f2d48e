"""Embeddings of Aut_1 and Aut_{U(K)} of the plane into SL(2, K[z]).

A letter (delta, f) goes to ``I + psi(f)(z) * e_delta`` where
``e_delta = (a, b)^T (b, -a)`` and ``psi(f)(z) = f(z) / z``; the linear map
``(x, y + a x)`` goes to ``[[1, 0], [a, 1]]``.
"""

from __future__ import annotations

import itertools

from .exactfield import QQ, PolyMatrix, zring
from .planeaut import Direction, MixedWord, letter_ring, mat_id


class NontrivialLinearPart(ValueError):
    pass


class LinearPartNotInU(ValueError):
    pass


def e_delta(d: Direction, field=QQ):
    a, b = d.a, d.b
    return ((a * b, -a * a), (b * b, -a * b))


def psi(f, field=QQ):
    """t^2 K[t] -> z K[z], f(t) |-> f(z) / z."""
    Z = zring(field)
    return Z.from_dict({(e[0] - 1,): c for e, c in f.terms.items()})


def letter_matrix(d: Direction, f, field=QQ) -> PolyMatrix:
    Z = zring(field)
    g = psi(f, field)
    e = e_delta(d, field)
    rows = [
        [Z.const(field.one if i == j else field.zero) + g.scale(e[i][j]) for j in range(2)]
        for i in range(2)
    ]
    return PolyMatrix(Z, rows)


def _letters_product(w: MixedWord, start: PolyMatrix) -> PolyMatrix:
    out = start
    for d, f in w.letters:
        out = out @ letter_matrix(d, f, w.field)
    return out


def embed_aut1(w: MixedWord) -> PolyMatrix:
    field = w.field
    if w.s != mat_id(field):
        raise NontrivialLinearPart("embed_aut1 needs a word with identity linear part")
    return _letters_product(w, PolyMatrix.identity(2, zring(field)))


def embed_autU(w: MixedWord) -> PolyMatrix:
    field = w.field
    s = w.s
    if not (s[0][0] == field.one and s[1][1] == field.one and s[0][1] == field.zero):
        raise LinearPartNotInU(f"linear part {s} is not of the form (x, y + a x)")
    Z = zring(field)
    start = PolyMatrix(Z, [[1, 0], [Z.const(s[1][0]), 1]])
    return _letters_product(w, start)


def is_congruent_identity(m: PolyMatrix) -> bool:
    return m.at_zero().is_identity()


def reduced_words(depth, coeffs, directions, field=QQ):
    """All reduced letter sequences of length 1..depth with f = c t^2."""
    T = letter_ring(field)
    t2 = T.gen("t") ** 2
    letters = [(d, t2.scale(field(c))) for d in directions for c in coeffs]
    for length in range(1, depth + 1):
        for combo in itertools.product(letters, repeat=length):
            if any(combo[i][0] == combo[i + 1][0] for i in range(length - 1)):
                continue
            yield MixedWord(mat_id(field), combo, field)


def verify_free(depth, coeffs, directions=None, field=QQ):
    """Check that distinct reduced words have distinct, nonidentity images."""
    if depth > 4 or len(coeffs) > 4:
        raise ValueError("verify_free is limited to depth 4 and 4 coefficients")
    if directions is None:
        directions = [Direction.zero(field), Direction.infinity(field)]
    if len(directions) > 3:
        raise ValueError("verify_free is limited to 3 directions")
    seen = {}
    collisions = []
    trivial = []
    count = 0
    for w in reduced_words(depth, coeffs, directions, field):
        count += 1
        m = embed_aut1(w)
        if m.is_identity():
            trivial.append(w.to_text())
        prev = seen.get(m)
        if prev is not None:
            collisions.append((prev.to_text(), w.to_text()))
        else:
            seen[m] = w
    return {
        "words": count,
        "distinct": len(seen),
        "collisions": collisions,
        "trivial": trivial,
        "ok": not collisions and not trivial,
    }
