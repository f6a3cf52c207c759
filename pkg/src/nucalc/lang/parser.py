"""Recursive-descent parser for the concrete syntax.

Grammar (``v`` values, ``e`` computations)::

    e    ::= let x = e in e | if v then e else e | new | atom atom | v
    v    ::= fix f(x:T):T. e | fun (x:T). e | sum [= sum]
    sum  ::= atom (+ atom)*
    atom ::= x | true | false | int | ( v )
    T    ::= int | bool | name | T -> T | ( T )

Application takes two atoms; ``fix``/``fun`` bodies extend as far right as
possible.
"""
from __future__ import annotations

import re

from ..errors import NuSyntaxError
from .syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var)

KEYWORDS = {"let", "in", "new", "if", "then", "else", "fix", "fun", "true", "false", "int", "bool", "name"}

_TOKEN = re.compile(
    r"\s*(?:(?P<int>-?\d+)|(?P<arrow>->)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[()=+:.]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise NuSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "ident" and value in KEYWORDS:
            kind = "kw"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    # token helpers
    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, kind, value=None) -> bool:
        k, v, _ = self.peek()
        return k == kind and (value is None or v == value)

    def expect(self, kind, value=None):
        if not self.at(kind, value):
            k, v, pos = self.peek()
            want = value if value is not None else kind
            raise NuSyntaxError(f"expected {want!r}, found {v or k!r}", pos)
        return self.advance()

    def ident(self) -> str:
        return self.expect("ident")[1]

    def starts_atom(self) -> bool:
        k, v, _ = self.peek()
        return k in ("ident", "int") or (k == "kw" and v in ("true", "false")) or (k == "sym" and v == "(")

    def finish(self):
        if not self.at("eof"):
            k, v, pos = self.peek()
            raise NuSyntaxError(f"unexpected trailing {v!r}", pos)

    # types
    def type_(self):
        if self.at("sym", "("):
            self.advance()
            t = self.type_()
            self.expect("sym", ")")
        else:
            k, v, pos = self.advance()
            if k == "kw" and v == "int":
                t = INT
            elif k == "kw" and v == "bool":
                t = BOOL
            elif k == "kw" and v == "name":
                t = NAME
            else:
                raise NuSyntaxError(f"expected a type, found {v or k!r}", pos)
        if self.at("arrow"):
            self.advance()
            return Arrow(t, self.type_())
        return t

    # computations
    def comp(self):
        if self.at("kw", "let"):
            self.advance()
            x = self.ident()
            self.expect("sym", "=")
            bound = self.comp()
            self.expect("kw", "in")
            return Let(x, bound, self.comp())
        if self.at("kw", "if"):
            self.advance()
            cond = self.value()
            self.expect("kw", "then")
            then = self.comp()
            self.expect("kw", "else")
            return If(cond, then, self.comp())
        if self.at("kw", "new"):
            self.advance()
            return New()
        if self.at("kw", "fix") or self.at("kw", "fun"):
            return Ret(self.function())
        if self.starts_atom():
            head = self.atom()
            if self.starts_atom():
                return App(head, self.atom())
            return Ret(self.value_rest(head))
        k, v, pos = self.peek()
        raise NuSyntaxError(f"expected a term, found {v or k!r}", pos)

    # values
    def value(self):
        if self.at("kw", "fix") or self.at("kw", "fun"):
            return self.function()
        return self.value_rest(self.atom())

    def value_rest(self, head):
        left = self.sum_rest(head)
        if self.at("sym", "="):
            self.advance()
            return Eq(left, self.sum_rest(self.atom()))
        return left

    def sum_rest(self, head):
        while self.at("sym", "+"):
            self.advance()
            head = Plus(head, self.atom())
        return head

    def function(self):
        if self.at("kw", "fix"):
            self.advance()
            f = self.ident()
            self.expect("sym", "(")
            x = self.ident()
            self.expect("sym", ":")
            arg = self.type_()
            self.expect("sym", ")")
            self.expect("sym", ":")
            res = self.type_()
            self.expect("sym", ".")
            return Fix(f, x, arg, res, self.comp())
        self.expect("kw", "fun")
        self.expect("sym", "(")
        x = self.ident()
        self.expect("sym", ":")
        arg = self.type_()
        self.expect("sym", ")")
        self.expect("sym", ".")
        return Fix(None, x, arg, None, self.comp())

    def atom(self):
        k, v, pos = self.advance()
        if k == "ident":
            return Var(v)
        if k == "int":
            return IntLit(int(v))
        if k == "kw" and v in ("true", "false"):
            return BoolLit(v == "true")
        if k == "sym" and v == "(":
            inner = self.value()
            self.expect("sym", ")")
            return inner
        raise NuSyntaxError(f"expected a value, found {v or k!r}", pos)


def parse_comp(text: str):
    p = Parser(text)
    e = p.comp()
    p.finish()
    return e


def parse_value(text: str):
    p = Parser(text)
    v = p.value()
    p.finish()
    return v


def parse_type(text: str):
    p = Parser(text)
    t = p.type_()
    p.finish()
    return t


def parse(text: str):
    """Parse a term; a bare value is returned as a value, not wrapped in ``Ret``."""
    e = parse_comp(text)
    return e.value if isinstance(e, Ret) else e
