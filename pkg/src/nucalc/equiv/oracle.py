"""Brute-force search for a distinguishing observation.

An observation of type ``τ`` is a closed ``fun (x:τ). body`` with ``body :
bool``.  Bodies are enumerated type-directedly up to a depth bound from a
restricted but complete-in-spirit grammar: atoms, ``=``/``+`` against the
probe literals, ``new``, application of a variable, ``let`` over an
effectful computation whose result is used, and ``if`` on a boolean.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ..concrete import DIVERGE, eval_concrete
from ..lang.syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var,
                           depth, free_vars)

INT_PROBES = (-1, 0, 1, 2)
OBS_VAR = "x"


def _atoms(ctx: tuple, ty) -> list:
    out = [Var(x) for x, t in ctx if t == ty]
    if ty == BOOL:
        out += [BoolLit(True), BoolLit(False)]
    elif ty == INT:
        out += [IntLit(i) for i in INT_PROBES]
    return out


def _values(ctx: tuple, ty, d: int) -> list:
    out = list(_atoms(ctx, ty)) if d >= 1 else []
    if d >= 2 and ty == BOOL:
        names = [Var(x) for x, t in ctx if t == NAME]
        ints = [Var(x) for x, t in ctx if t == INT]
        out += [Eq(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
        out += [Eq(a, b) for i, a in enumerate(ints) for b in ints[i + 1:]]
        out += [Eq(a, IntLit(c)) for a in ints for c in INT_PROBES]
        if d >= 3:
            out += [Eq(Plus(a, IntLit(c)), IntLit(k)) for a in ints for c in INT_PROBES if c for k in INT_PROBES]
    if d >= 2 and ty == INT:
        ints = [Var(x) for x, t in ctx if t == INT]
        out += [Plus(a, IntLit(c)) for a in ints for c in INT_PROBES if c]
    return out


def _effects(ctx: tuple, d: int) -> list:
    """Computations worth binding with ``let``: ``new`` and applications."""
    out = [(NAME, New())] if d >= 1 else []
    if d >= 2:
        for f, t in ctx:
            if isinstance(t, Arrow) and (t.arg in (INT, BOOL, NAME)):
                out += [(t.res, App(Var(f), a)) for a in _atoms(ctx, t.arg)]
    return out


@lru_cache(maxsize=None)
def _comps(ctx: tuple, ty, d: int) -> tuple:
    if d <= 0:
        return ()
    out = [Ret(v) for v in _values(ctx, ty, d)]
    if ty == NAME:
        out.append(New())
    out += [e for t, e in _effects(ctx, d) if t == ty and isinstance(e, App)]
    if d >= 2:
        fresh = f"y{len(ctx)}"
        for t, bound in _effects(ctx, d - 1):
            inner = ctx + ((fresh, t),)
            for body in _comps(inner, ty, d - 1):
                if fresh in free_vars(body):
                    out.append(Let(fresh, bound, body))
        conds = [v for v in _values(ctx, BOOL, d - 1) if not isinstance(v, BoolLit)]
        branches = _comps(ctx, ty, d - 1)
        for c in conds:
            for e1 in branches:
                for e2 in branches:
                    if e1 != e2:
                        out.append(If(c, e1, e2))
    seen = set()
    unique = []
    for e in out:
        if e not in seen and depth(e) <= d:
            seen.add(e)
            unique.append(e)
    return tuple(unique)


def observations(ty, max_depth: int) -> Iterator[Fix]:
    """Closed observations ``fun (x:ty). body`` of depth at most ``max_depth``, shallowest first."""
    ctx = ((OBS_VAR, ty),)
    seen = set()
    for d in range(1, max_depth):
        for body in _comps(ctx, BOOL, d):
            if body not in seen:
                seen.add(body)
                yield Fix(None, OBS_VAR, ty, None, body)


def observe(program, o: Fix, fuel: int):
    """Run ``let r = program in o r`` from supply 0; ``None`` when it diverges."""
    res = eval_concrete({}, Let("r", program, App(o, Var("r"))), 0, fuel)
    return None if res is DIVERGE else res.value.value


def find_distinguisher(e, e2, ty, max_depth: int, fuel: int):
    """First observation on which ``e`` and ``e2`` give different booleans, with both outcomes.

    Running out of fuel is not evidence of divergence, so an observation only
    counts when both sides finish within ``fuel``.
    """
    for o in observations(ty, max_depth):
        left, right = observe(e, o, fuel), observe(e2, o, fuel)
        if left is not None and right is not None and left != right:
            return o, left, right
    return None
