"""Recursive-descent parser for the canonical polynomial text form.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'

Division is only allowed by constants.  Names resolve to ring generators,
or to the generator of the coefficient field (``z`` in Q(z), ``a`` in GF).
"""

from __future__ import annotations

import re

from .fields import GaloisField, RationalFunctions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(SyntaxError):
    def __init__(self, msg, text="", pos=0):
        super().__init__(f"{msg} at position {pos}")
        self.msg = msg
        self.text = text
        self.pos = pos


def tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        elif m.group(3):
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", self.text, t[2])
        return t

    def error(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def expr(self):
        left = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                right = self.term()
                left = left + right if val == "+" else left - right
            else:
                return left

    def term(self):
        left = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                right = self.unary()
                if val == "*":
                    left = left * right
                else:
                    if not right.is_constant() or not right:
                        raise ParseError("division by a non-constant or zero", self.text, pos)
                    left = left / right.constant_coeff()
            else:
                return left

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        if kind == "op" and val == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", self.text, t[2])
            return base ** t[1]
        return base

    def atom(self):
        kind, val, pos = self.take()
        ring = self.ring
        if kind == "num":
            return ring.const(val)
        if kind == "name":
            if val in ring.gens:
                return ring.gen(val)
            f = ring.field
            if isinstance(f, RationalFunctions) and val == f.var:
                return ring.const(f.gen())
            if isinstance(f, GaloisField) and val == f.gen_name:
                return ring.const(f.gen())
            raise ParseError(f"unknown symbol {val!r}", self.text, pos)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", self.text, pos)


def parse_poly(text: str, ring):
    p = _Parser(text, ring)
    out = p.expr()
    if p.peek()[0] != "end":
        p.error(f"unexpected {p.peek()[1]!r}")
    return out


def parse_tuple(text: str, ring, arity: int | None = None):
    """Parse '(e1, e2, ...)' into a list of polynomials."""
    p = _Parser(text, ring)
    p.expect("(")
    items = [p.expr()]
    while p.peek()[0] == "op" and p.peek()[1] == ",":
        p.take()
        items.append(p.expr())
    p.expect(")")
    if p.peek()[0] != "end":
        p.error(f"unexpected {p.peek()[1]!r}")
    if arity is not None and len(items) != arity:
        raise ParseError(f"expected {arity} components, got {len(items)}", text, 0)
    return items
