"""Heterogeneous (span-indexed) relation for the certificate fragment.

Values at two different worlds are related *above a span*.  At ``name ->
bool`` the relation only constrains arguments in the span's low point, which
is what lets a closure keep a private name to itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any

from ..abstract import TBOT, AClosure, ABool, AInt, AName, support, transport
from ..errors import FuelExhausted, MiddleMismatch, ShapeMismatch
from ..lang.syntax import BOOL, INT, NAME
from ..spans import (Span, check_parametric_square, compose_spans, parametric_extensions, reverse_span)
from ..worlds import Injection, pullback_cospan
from .direct import DEFAULT_FUEL, NAME_TO_BOOL, tabulate

STAR = "⋆"
BOT = "⊥"


@dataclass(frozen=True)
class MonadT:
    """Marks the monadic type ``T τ``; not part of the object language."""

    res: Any

    def __str__(self):
        return f"T {self.res}"


@dataclass(frozen=True)
class ParamWitness:
    """Proof that two values are related above ``span``.

    ``inner`` is ``⋆`` at int/bool/name->bool, the low-point name at ``name``,
    and at ``T τ`` either ``⊥`` or the witness for the payloads above the
    extended span.
    """

    span: Span
    type: Any
    inner: Any

    def to_json(self) -> dict:
        out = {"span": self.span.to_json(), "type": str(self.type)}
        out["inner"] = self.inner.to_json() if isinstance(self.inner, ParamWitness) else self.inner
        return out


def in_fragment(ty) -> bool:
    if isinstance(ty, MonadT):
        return ty.res in (INT, BOOL, NAME, NAME_TO_BOOL)
    return ty in (INT, BOOL, NAME, NAME_TO_BOOL)


def relate_tables(s: Span, f, f2) -> bool:
    """Related above ``s`` iff ``f(S.u(n)) = f2(S.u'(n))`` for every low-point ``n``."""
    f, f2 = dict(f), dict(f2)
    return all(f[s.u(n)] == f2[s.u_right(n)] for n in s.low)


def _closures_related(s: Span, a: AClosure, a2: AClosure, fuel: int, ext: int) -> bool:
    if a.world != s.left or a2.world != s.right:
        raise ShapeMismatch("closures do not live at the span's endpoints")
    for s2, sq in parametric_extensions(s, ext):
        b = transport(sq.top, a)
        b2 = transport(sq.bottom, a2)
        if not relate_tables(s2, tabulate(b, fuel, ext=0), tabulate(b2, fuel, ext=0)):
            return False
    return True


def _matchings(left: list[int], right: list[int]):
    """Partial bijections between ``left`` and ``right``, smallest first."""
    for k in range(min(len(left), len(right)) + 1):
        for ls in combinations(left, k):
            for rs in permutations(right, k):
                yield dict(zip(ls, rs))


def param_relate(s: Span, a, a2, ty, budget: int = 256, fuel: int = DEFAULT_FUEL, ext: int = 1):
    """A witness that ``a`` (at ``s.left``) and ``a2`` (at ``s.right``) are related, or ``None``.

    At ``T τ`` the extended span is searched among partial bijections that
    agree with ``s`` on old names and link fresh names only to fresh names;
    at most ``budget`` candidates are tried.
    """
    if not in_fragment(ty):
        raise ShapeMismatch(f"type {ty} is outside the parametric fragment")
    if ty in (INT, BOOL):
        ok = isinstance(a, (AInt, ABool)) and type(a) is type(a2) and a == a2
        return ParamWitness(s, ty, STAR) if ok else None
    if ty == NAME:
        if not (isinstance(a, AName) and isinstance(a2, AName)):
            raise ShapeMismatch("expected names")
        for n in s.low:
            if s.u(n) == a.n and s.u_right(n) == a2.n:
                return ParamWitness(s, ty, n)
        return None
    if ty == NAME_TO_BOOL:
        return ParamWitness(s, ty, STAR) if _closures_related(s, a, a2, fuel, ext) else None

    # monadic results
    if a is TBOT or a2 is TBOT:
        return ParamWitness(s, ty, BOT) if (a is TBOT and a2 is TBOT) else None
    if not (s.left <= a.world and s.right <= a2.world):
        raise ShapeMismatch("results do not extend the span's endpoints")
    w1, w2 = a.world, a2.world
    top = Injection.inclusion(s.left, w1)
    bottom = Injection.inclusion(s.right, w2)
    base = dict(s.pairs())
    fresh_left = sorted((w1 - s.left) & support(a.value))
    fresh_right = sorted((w2 - s.right) & support(a2.value))
    tried = 0
    for extra in _matchings(fresh_left, fresh_right):
        if tried >= budget:
            return None
        tried += 1
        s1 = Span.from_pairs(w1, w2, {**base, **extra})
        if check_parametric_square(top, bottom, s, s1) is None:
            continue
        inner = param_relate(s1, a.value, a2.value, ty.res, budget, fuel, ext)
        if inner is not None:
            return ParamWitness(s, ty, inner)
    return None


def verify_witness(s: Span, a, a2, ty, wit: ParamWitness, fuel: int = DEFAULT_FUEL, ext: int = 1) -> bool:
    """Re-check a witness against the values it claims to relate."""
    if not isinstance(wit, ParamWitness) or wit.type != ty or wit.span != s:
        return False
    if ty in (INT, BOOL):
        return wit.inner == STAR and type(a) is type(a2) and a == a2
    if ty == NAME:
        n = wit.inner
        return n in s.low and s.u(n) == a.n and s.u_right(n) == a2.n
    if ty == NAME_TO_BOOL:
        try:
            return wit.inner == STAR and _closures_related(s, a, a2, fuel, ext)
        except FuelExhausted:
            return False
    if wit.inner == BOT:
        return a is TBOT and a2 is TBOT
    if a is TBOT or a2 is TBOT or not isinstance(wit.inner, ParamWitness):
        return False
    s1 = wit.inner.span
    if s1.left != a.world or s1.right != a2.world:
        return False
    if not (s.left <= a.world and s.right <= a2.world):
        return False
    top = Injection.inclusion(s.left, a.world)
    bottom = Injection.inclusion(s.right, a2.world)
    if check_parametric_square(top, bottom, s, s1) is None:
        return False
    return verify_witness(s1, a.value, a2.value, ty.res, wit.inner, fuel, ext)


def reverse_witness(wit: ParamWitness) -> ParamWitness:
    """Symmetry: the same evidence read above the reversed span."""
    inner = wit.inner
    if isinstance(inner, ParamWitness):
        inner = reverse_witness(inner)
    return ParamWitness(reverse_span(wit.span), wit.type, inner)


def param_compose(wit: ParamWitness, wit2: ParamWitness) -> ParamWitness:
    """Transitivity: compose witnesses above ``S`` and ``S'`` into one above ``t(S, S')``."""
    s, s2 = wit.span, wit2.span
    if s.right != s2.left:
        raise MiddleMismatch("witness spans do not share a middle world")
    if wit.type != wit2.type:
        raise MiddleMismatch("witnesses are at different types")
    span = compose_spans(s, s2)
    ty = wit.type
    if ty in (INT, BOOL) or ty == NAME_TO_BOOL:
        return ParamWitness(span, ty, STAR)
    if ty == NAME:
        n, n2 = wit.inner, wit2.inner
        if s.u_right(n) != s2.u(n2):
            raise MiddleMismatch("name witnesses disagree on the middle name")
        # the composite low point is carved out of lop S, so n itself witnesses
        sq = pullback_cospan(s.u_right, s2.u)
        assert n in sq.low
        return ParamWitness(span, ty, n)
    if wit.inner == BOT or wit2.inner == BOT:
        if wit.inner != wit2.inner:
            raise MiddleMismatch("one side diverges in the middle and the other does not")
        return ParamWitness(span, ty, BOT)
    return ParamWitness(span, ty, param_compose(wit.inner, wit2.inner))
