"""Command-line front end: ``autplane <verb> [options] literals...``.

Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage or
literal syntax error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import charlab, nagao, planeaut, superrep, torsionlab
from .exactfield import (
    QQ,
    CharacteristicError,
    FieldError,
    ParseError,
    RationalFunction,
    field_from_spec,
    parse_poly,
)
from .planeaut import Direction, MixedWord, PlaneAut, letter_ring, mat

SCHEMA = "autplane.cli/1"


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# literals


def _split_top(text: str, sep=","):
    """Split on ``sep`` outside any brackets."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError("unbalanced brackets", text, len(text))
    out.append("".join(cur))
    return out


def parse_scalar(text: str, field=QQ):
    p = parse_poly(text, letter_ring(field))
    if not p.is_constant():
        raise ParseError(f"{text!r} is not a constant", text, 0)
    return p.constant_coeff()


def parse_direction(text: str, field=QQ) -> Direction:
    t = text.strip()
    if t == "d0":
        return Direction.zero(field)
    if t == "dinf":
        return Direction.infinity(field)
    if t.startswith("(") and t.endswith(")") and ";" in t:
        a, b = t[1:-1].split(";", 1)
        return Direction(parse_scalar(a, field), parse_scalar(b, field))
    raise ParseError(f"bad direction {text!r}; use d0, dinf or (a;b)", text, 0)


def parse_matrix(text: str, field=QQ):
    t = text.strip()
    if not (t.startswith("[[") and t.endswith("]]")):
        raise ParseError("matrix literal must look like [[a,b],[c,d]]", text, 0)
    rows = _split_top(t[1:-1])
    if len(rows) != 2:
        raise ParseError("matrix literal needs two rows", text, 0)
    out = []
    for r in rows:
        r = r.strip()
        entries = _split_top(r[1:-1])
        if len(entries) != 2:
            raise ParseError("matrix rows need two entries", text, 0)
        out.append([parse_scalar(e, field) for e in entries])
    return mat(field, out)


def parse_word(text: str, field=QQ) -> MixedWord:
    """``[(d0,t^2),((1;2),3*t^3)]`` with an optional ``s=[[a,b],[c,d]]`` prefix."""
    t = text.strip()
    s = planeaut.mat_id(field)
    if t.startswith("s="):
        end = t.index("]]") + 2
        s = parse_matrix(t[2:end], field)
        t = t[end:].strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError("word literal must be a bracketed list", text, 0)
    body = t[1:-1].strip()
    T = letter_ring(field)
    letters = []
    if body:
        for item in _split_top(body):
            item = item.strip()
            if not (item.startswith("(") and item.endswith(")")):
                raise ParseError(f"bad letter {item!r}", text, 0)
            parts = _split_top(item[1:-1])
            if len(parts) != 2:
                raise ParseError(f"letter {item!r} needs a direction and a polynomial", text, 0)
            letters.append((parse_direction(parts[0], field), parse_poly(parts[1], T)))
    return MixedWord(s, letters, field)


# ---------------------------------------------------------------------------
# JSON helpers


def jnum(c):
    """Exact numbers as strings."""
    return repr(c) if isinstance(c, RationalFunction) else str(c)


def matrix_json(m):
    return [[a.to_text() for a in row] for row in m.rows]


def word_json(w: MixedWord):
    return {
        "s": [[jnum(c) for c in row] for row in w.s],
        "letters": [{"delta": repr(d), "f": f.to_text()} for d, f in w.letters],
        "text": w.to_text(),
    }


def emit(args, payload, text_lines):
    if args.format == "json":
        payload = {"schema": SCHEMA, "verb": args.verb, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# verbs


def _inputs(args):
    items = list(args.inputs)
    if items == ["-"] or (not items and not sys.stdin.isatty() and args.stdin):
        items = [ln.strip() for ln in sys.stdin if ln.strip()]
    return items


def cmd_compose(args):
    maps = [PlaneAut.parse(s, args.field_obj) for s in _inputs(args)]
    if not maps:
        raise UsageError("compose needs at least one automorphism")
    phi = planeaut.compose_all(maps, args.field_obj)
    emit(args, {"result": phi.to_text(), "degree": phi.degree()}, [phi.to_text()])


def cmd_invert(args):
    out, lines = [], []
    for s in _inputs(args):
        phi = PlaneAut.parse(s, args.field_obj)
        inv = planeaut.invert(phi)
        out.append({"input": phi.to_text(), "inverse": inv.to_text()})
        lines.append(inv.to_text())
    emit(args, {"results": out}, lines)


def cmd_factor(args):
    out, lines = [], []
    for s in _inputs(args):
        phi = PlaneAut.parse(s, args.field_obj)
        fac = planeaut.factor_vdk(phi)
        recomposed = fac.compose()
        out.append(
            {
                "input": phi.to_text(),
                "factors": [{"kind": k, "map": f.to_text()} for k, f in fac.factors],
                "degree": phi.degree(),
                "recomposes": recomposed == phi,
                "hash": hash(recomposed) == hash(phi),
            }
        )
        lines.append(" o ".join(f"{k}{f.to_text()}" for k, f in fac.factors))
    emit(args, {"results": out}, lines)


def cmd_word(args):
    out, lines = [], []
    for s in _inputs(args):
        if s.strip().startswith(("[", "s=")):
            w = parse_word(s, args.field_obj)
            phi = planeaut.from_mixed_word(w)
            out.append({"word": word_json(w), "map": phi.to_text()})
            lines.append(phi.to_text())
        else:
            phi = PlaneAut.parse(s, args.field_obj)
            w = planeaut.to_mixed_word(phi)
            out.append({"map": phi.to_text(), "word": word_json(w)})
            lines.append(w.to_text())
    emit(args, {"results": out}, lines)


def _require_word(args):
    if not args.word and not args.inputs:
        raise UsageError("a --word literal is required")
    return [args.word] if args.word else _inputs(args)


def cmd_rho(args):
    N = args.N
    out, lines = [], []
    for s in _require_word(args):
        w = parse_word(s, args.field_obj)
        m = superrep.rep_word(N, w, args.n)
        det = m.det()
        out.append({"word": w.to_text(), "dim": m.n, "matrix": matrix_json(m), "det": det.to_text()})
        lines.append(f"dim {m.n}, det {det.to_text()}")
        lines += ["  [" + ", ".join(row) + "]" for row in matrix_json(m)]
    emit(args, {"N": N, "results": out}, lines)


def cmd_nagao(args):
    out, lines = [], []
    for s in _require_word(args):
        w = parse_word(s, args.field_obj)
        if w.s == planeaut.mat_id(w.field):
            m, kind = nagao.embed_aut1(w), "aut1"
        else:
            m, kind = nagao.embed_autU(w), "autU"
        out.append({"word": w.to_text(), "embedding": kind, "matrix": matrix_json(m), "det": m.det().to_text()})
        lines.append(repr(m))
    emit(args, {"results": out}, lines)


def _lattice(args):
    gens = _inputs(args)
    if not gens:
        raise UsageError("give at least one generator")
    return charlab.LatticeSubgroup(gens)


def cmd_classify(args):
    lam = _lattice(args)
    res = charlab.classify(lam, args.seed)
    payload = {
        "lattice": repr(lam),
        "rank": lam.rank(),
        "trdeg": charlab.trdeg(lam, args.seed),
        "d": charlab.d_divisors(lam),
        "class": res,
    }
    if res == "Bad":
        payload["minimally_bad"] = repr(charlab.minimally_bad(lam, args.seed))
    emit(args, payload, [f"{lam}: {res} (rank {payload['rank']}, trdeg {payload['trdeg']})"])


def cmd_relation(args):
    lam = _lattice(args)
    rel = charlab.relation_gen(lam, args.n or 1)
    emit(
        args,
        {"lattice": repr(lam), "n": rel.n, "P": rel.P.to_text(), "variables": list(rel.P.ring.gens)},
        [rel.P.to_text()],
    )


def cmd_newton(args):
    lam = _lattice(args)
    rep = charlab.newton_scaling_check(lam, args.n or 2)
    rep = {k: (v if not isinstance(v, list) else [list(map(jnum, p)) for p in v]) for k, v in rep.items()}
    emit(args, {"lattice": repr(lam), "report": rep}, [f"f_{rep['n']} = {rep['f_n']}, hull_n = {rep['hull_n']}"])


def cmd_verdict(args):
    if not args.S:
        raise UsageError("verdict needs --S")
    S = charlab.parse_descriptor(args.S, args.field_obj)
    v = charlab.verdict(S)
    d = v.as_dict()
    if args.format == "json":
        print(json.dumps(d, sort_keys=True))
    else:
        print(f"{v.descriptor}: {v.result}  [{v.rule}]")
        if v.note:
            print(f"  note: {v.note}")


def _primes(args):
    if args.primes:
        return [int(p) for p in args.primes.split(",") if p]
    return [args.p] if args.p else [3, 5, 7]


def cmd_probe(args):
    kind = args.inputs[0] if args.inputs else "bs"
    rest = args.inputs[1:]
    if kind == "bs":
        res = {p: torsionlab.bs_relation_holds(p) for p in _primes(args)}
        emit(args, {"kind": kind, "relation": {str(p): ok for p, ok in res.items()}},
             [f"p={p}: {'holds' if ok else 'FAILS'}" for p, ok in res.items()])
    elif kind == "separate":
        if not rest:
            raise UsageError("probe separate needs a word such as stST")
        first, rep = torsionlab.separate(rest[0], _primes(args))
        emit(args, {"kind": kind, "prime": first, "report": {str(k): v for k, v in rep.items()}},
             [f"separated at p={first}" if first else "not separated by the listed primes"])
    elif kind == "sumprod":
        rep = torsionlab.sum_product_check(args.p or 2, args.r or 1, rest[0] if rest else "poly")
        emit(args, {"kind": kind, "report": rep}, [f"sum = {rep['sum']}, product = {rep['product']}, ok={rep['ok']}"])
    elif kind in ("class", "em"):
        p, r = args.p or 2, args.r or 1
        G = torsionlab.build_G(p, r) if kind == "class" else torsionlab.build_EM(p, r)
        c = torsionlab.nilpotency_class(G)
        emit(args, {"kind": kind, "p": p, "r": r, "order": G.order, "class": c,
                    "expected": torsionlab.expected_class(p, r)},
             [f"order {G.order}, class {c} (1+(p-1)r = {torsionlab.expected_class(p, r)})"])
    elif kind == "roundtrip":
        rng = random.Random(args.seed)
        count = int(rest[0]) if rest else 10
        cases, lines = [], []
        for i in range(count):
            phi = planeaut.random_tame(rng, args.field_obj)
            fac = planeaut.factor_vdk(phi)
            ok = fac.compose() == phi
            prod = 1
            for d in fac.elementary_degrees():
                prod *= d
            cases.append({"map": phi.to_text(), "factors": len(fac), "ok": ok, "degree_ok": prod == phi.degree()})
            lines.append(f"{i}: {phi.to_text()} -> {len(fac)} factors ok={ok}")
        emit(args, {"kind": kind, "seed": args.seed, "cases": cases}, lines)
    else:
        raise UsageError(f"unknown probe {kind!r}")


VERBS = {
    "compose": cmd_compose,
    "invert": cmd_invert,
    "factor": cmd_factor,
    "word": cmd_word,
    "rho": cmd_rho,
    "nagao": cmd_nagao,
    "classify": cmd_classify,
    "relation": cmd_relation,
    "newton": cmd_newton,
    "verdict": cmd_verdict,
    "probe": cmd_probe,
}

DOMAIN_ERRORS = (
    planeaut.NotAnAutomorphism,
    planeaut.OriginNotFixed,
    planeaut.LinearPartNotInS,
    superrep.DegreeOutOfRange,
    superrep.DivisibilityViolated,
    nagao.NontrivialLinearPart,
    nagao.LinearPartNotInU,
    charlab.NotBad,
    charlab.ScopeExceeded,
    charlab.EliminationFailed,
    charlab.ScalingViolated,
    charlab.UnsupportedDescriptor,
    torsionlab.NotNilpotent,
    torsionlab.GroupTooLarge,
    CharacteristicError,
    FieldError,
    ZeroDivisionError,
    ValueError,
)


def build_parser():
    ap = argparse.ArgumentParser(prog="autplane", description="Exact computations with plane automorphisms.")
    ap.add_argument("verb", choices=sorted(VERBS))
    ap.add_argument("inputs", nargs="*", help="literals; '-' reads one per line from stdin")
    ap.add_argument("--field", default="Q", help="Q, Fp:<p> or Qt")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--n", type=int, default=None)
    ap.add_argument("--S", default=None, help="subgroup descriptor, e.g. SL2 or SO(x^2+y^2)")
    ap.add_argument("--p", type=int, default=None)
    ap.add_argument("--r", type=int, default=None)
    ap.add_argument("--primes", default=None, help="comma-separated primes")
    ap.add_argument("--word", default=None, help="mixed word literal")
    ap.add_argument("--stdin", action="store_true", help="read literals from stdin")
    return ap


def _error(kind, message, code, **extra):
    print(json.dumps({"schema": SCHEMA, "error": kind, "message": message, **extra}, sort_keys=True))
    return code


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_intermixed_args(argv)
    try:
        args.field_obj = field_from_spec(args.field)
    except FieldError as e:
        return _error("UsageError", str(e), 2)
    try:
        VERBS[args.verb](args)
    except ParseError as e:
        return _error("SyntaxError", e.msg, 2, position=e.pos)
    except UsageError as e:
        return _error("UsageError", str(e), 2)
    except DOMAIN_ERRORS as e:
        return _error(type(e).__name__, str(e), 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
