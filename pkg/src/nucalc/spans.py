"""Spans of worlds (partial bijections) with identity, reversal and composition.

A span ``S: w <-> w'`` is a low point with two injections into ``w`` and
``w'``; read it as the partial bijection ``{(S.u(n), S.u'(n)) | n in low}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import MiddleMismatch, ShapeMismatch
from .worlds import Injection, PullbackSquare, World, compose, is_pullback, pullback_cospan


@dataclass(frozen=True)
class Span:
    left: World
    right: World
    low: World
    u: Injection
    u_right: Injection

    def __post_init__(self):
        if self.u.dom != self.low or self.u_right.dom != self.low:
            raise ShapeMismatch("span legs must start at the low point")
        if self.u.cod != self.left or self.u_right.cod != self.right:
            raise ShapeMismatch("span legs must end at the span's endpoints")

    @classmethod
    def from_pairs(cls, left, right, pairs) -> "Span":
        """Span whose low point is the left-hand side of ``pairs``."""
        left, right = World(left), World(right)
        pairs = dict(pairs)
        low = World(pairs)
        return cls(left, right, low, Injection.inclusion(low, left), Injection(low, right, pairs))

    def pairs(self) -> set[tuple[int, int]]:
        return {(self.u(n), self.u_right(n)) for n in self.low}

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "low": self.low.to_json(),
            "u": self.u.to_json(),
            "u'": self.u_right.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "Span":
        left, right, low = World(data["left"]), World(data["right"]), World(data["low"])
        return cls(left, right, low, Injection.from_json(low, left, data["u"]),
                   Injection.from_json(low, right, data["u'"]))


@dataclass(frozen=True)
class ParametricSquare:
    source: Span
    target: Span
    top: Injection
    bottom: Injection
    mediating: Injection


def identity_span(w) -> Span:
    w = World(w)
    ident = Injection.identity(w)
    return Span(w, w, w, ident, ident)


def reverse_span(s: Span) -> Span:
    return Span(s.right, s.left, s.low, s.u_right, s.u)


def compose_spans(s: Span, s2: Span) -> Span:
    """``t(S, S')``: pull back the co-span ``S.u' , S'.u`` over the middle world."""
    if s.right != s2.left:
        raise MiddleMismatch(f"middle worlds differ: {s.right!r} vs {s2.left!r}")
    sq = pullback_cospan(s.u_right, s2.u)
    return Span(s.left, s2.right, sq.low, compose(s.u, sq.left_down), compose(s2.u_right, sq.right_down))


def spans_isomorphic(s: Span, s2: Span) -> Injection | None:
    """Isomorphism ``t: lop S -> lop S'`` commuting with both legs, if any."""
    if s.left != s2.left or s.right != s2.right:
        raise ShapeMismatch("spans have different endpoints")
    if len(s.low) != len(s2.low):
        return None
    back = s2.u.partial_inverse()
    table = {}
    for n in s.low:
        m = back.get(s.u(n))
        if m is None or s2.u_right(m) != s.u_right(n):
            return None
        table[n] = m
    return Injection(s.low, s2.low, table)


def check_parametric_square(top: Injection, bottom: Injection, source: Span, target: Span) -> ParametricSquare | None:
    """Find the mediating map making ``(top, bottom): source -> target`` parametric."""
    if top.dom != source.left or top.cod != target.left:
        raise ShapeMismatch("top must map source.left to target.left")
    if bottom.dom != source.right or bottom.cod != target.right:
        raise ShapeMismatch("bottom must map source.right to target.right")
    back = target.u.partial_inverse()
    table = {}
    for n in source.low:
        m = back.get(top(source.u(n)))
        if m is None or target.u_right(m) != bottom(source.u_right(n)):
            return None
        table[n] = m
    if len(set(table.values())) != len(table):
        return None
    mediating = Injection(source.low, target.low, table)
    upper = PullbackSquare(source.low, target.left, top, target.u, source.u, mediating)
    lower = PullbackSquare(source.low, target.right, bottom, target.u_right, source.u_right, mediating)
    if not (is_pullback(upper) and is_pullback(lower)):
        return None
    return ParametricSquare(source, target, top, bottom, mediating)


def parametric_extensions(s: Span, ext: int) -> Iterator[tuple[Span, ParametricSquare]]:
    """Extensions of ``s`` along inclusions by new linked names and garbage.

    Yields every ``S2`` obtained by adding ``c`` fresh linked pairs, ``g``
    left-only and ``g'`` right-only fresh names with ``c + g + g' <= ext``,
    together with the parametric square ``(incl, incl): s -> S2``.
    """
    for c, g, g2 in product(range(ext + 1), repeat=3):
        if c + g + g2 > ext:
            continue
        left_new = s.left.fresh(c + g)
        right_new = s.right.fresh(c + g2)
        left = World(s.left | set(left_new))
        right = World(s.right | set(right_new))
        pairs = dict(s.pairs())
        pairs.update(zip(left_new[:c], right_new[:c]))
        s2 = Span.from_pairs(left, right, pairs)
        sq = check_parametric_square(Injection.inclusion(s.left, left), Injection.inclusion(s.right, right), s, s2)
        if sq is None:  # pragma: no cover - fresh names never break parametricity
            raise AssertionError("fresh extension is not parametric")
        yield s2, sq
