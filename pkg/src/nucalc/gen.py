"""Seeded, type-directed generation of closed well-typed terms and term pairs.

Every generator takes an explicit ``random.Random`` (or a seed) so corpora
are reproducible byte for byte.  Terms are built for a requested type, so
they typecheck by construction; the test-suite double-checks this.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .lang.pretty import pretty
from .lang.syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var,
                          free_vars, fun)

GROUND = (INT, BOOL, NAME)
NAME_TO_BOOL = Arrow(NAME, BOOL)
LITERAL_INTS = (-2, -1, 0, 1, 2, 3)


class TermGen:
    """Random closed terms over a small type universe.

    Arrow types are restricted to ground arguments and ground results, which
    keeps every generated term inside what the realizability checker and the
    oracle can handle.
    """

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.counter = 0

    def fresh(self, prefix: str = "v") -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    def any_type(self, arrows: bool = True):
        r = self.rng.random()
        if arrows and r < 0.15:
            return Arrow(self.rng.choice(GROUND), self.rng.choice(GROUND))
        return self.rng.choice(GROUND)

    # values

    def atom(self, ctx: tuple, ty):
        """A depth-1 value of ``ty`` or ``None`` when none exists in ``ctx``."""
        options = [Var(x) for x, t in ctx if t == ty]
        if options and self.rng.random() < 0.6:
            return self.rng.choice(options)
        if ty == INT:
            options.append(IntLit(self.rng.choice(LITERAL_INTS)))
        elif ty == BOOL:
            options.append(BoolLit(self.rng.random() < 0.5))
        return self.rng.choice(options) if options else None

    def value(self, ctx: tuple, ty, d: int):
        """A value of ``ty`` of depth at most ``d``, or ``None``."""
        a = self.atom(ctx, ty)
        if d <= 1:
            return a
        r = self.rng.random()
        if ty == INT and r < 0.4:
            left, right = self.value(ctx, INT, d - 1), self.atom(ctx, INT)
            return Plus(left, right)
        if ty == BOOL and r < 0.5:
            t = self.rng.choice([INT, NAME]) if any(t == NAME for _, t in ctx) else INT
            left, right = self.atom(ctx, t), self.atom(ctx, t)
            if left is not None and right is not None:
                return Eq(left, right)
        if isinstance(ty, Arrow) and (a is None or r < 0.7):
            return self.function(ctx, ty, d)
        return a

    def function(self, ctx: tuple, ty: Arrow, d: int) -> Fix:
        x = self.fresh("x")
        inner = ctx + ((x, ty.arg),)
        if ty.arg == INT and d >= 5 and self.rng.random() < 0.3:
            return self.countdown(ctx, ty.res, d)
        return fun(x, ty.arg, self.comp(inner, ty.res, d - 1))

    def countdown(self, ctx: tuple, res, d: int) -> Fix:
        """``fix f(n:int):res. if n = 0 then base else f (n + -1)``; diverges on negative input."""
        f, n = self.fresh("f"), self.fresh("n")
        base = self.comp(ctx + ((n, INT),), res, d - 3)
        step = App(Var(f), Plus(Var(n), IntLit(-1)))
        return Fix(f, n, INT, res, If(Eq(Var(n), IntLit(0)), base, step))

    # computations

    def comp(self, ctx: tuple, ty, d: int):
        """A computation of type ``ty`` of depth at most ``d``.

        The one exception is a closed arrow requested at depth 1, which is
        returned at its minimal depth 2.
        """
        d = max(d, 1)
        if d == 1:
            return self._leaf(ctx, ty)
        if isinstance(ty, Arrow) and d == 2:
            return Ret(self.function(ctx, ty, 2))
        r = self.rng.random()
        if r < 0.3:
            t = self.any_type(arrows=d >= 4)
            x = self.fresh()
            bound = self.comp(ctx, t, d - 1)
            return Let(x, bound, self.comp(ctx + ((x, t),), ty, d - 1))
        if r < 0.45:
            return If(self.value(ctx, BOOL, d - 1), self.comp(ctx, ty, d - 1), self.comp(ctx, ty, d - 1))
        if r < 0.65 and ty in GROUND and d >= 3:
            arg_t = self.rng.choice(GROUND)
            arg = self.atom(ctx, arg_t)
            if arg is not None:
                return App(self.function(ctx, Arrow(arg_t, ty), d - 1), arg)
        if r < 0.7 and ty in GROUND and d >= 6:
            k = self.rng.choice([0, 1, 2, 3, -1])
            return App(self.countdown(ctx, ty, d - 1), IntLit(k))
        if r < 0.8:
            fns = [(f, t) for f, t in ctx if isinstance(t, Arrow) and t.res == ty]
            if fns:
                f, t = self.rng.choice(fns)
                arg = self.atom(ctx, t.arg)
                if arg is not None:
                    return App(Var(f), arg)
        v = self.value(ctx, ty, d)
        return Ret(v) if v is not None else self._leaf(ctx, ty)

    def _leaf(self, ctx: tuple, ty):
        a = self.atom(ctx, ty)
        if a is not None and not (ty == NAME and self.rng.random() < 0.3):
            return Ret(a)
        if ty == NAME:
            return New()
        # closed arrow at depth 1 does not exist; the smallest one has depth 2
        x = self.fresh("x")
        return Ret(fun(x, ty.arg, self._leaf(ctx + ((x, ty.arg),), ty.res)))


def gen_comp(rng: random.Random, ty, depth: int, ctx: tuple = ()):
    """One closed computation of type ``ty`` (closed relative to ``ctx``)."""
    return TermGen(rng).comp(ctx, ty, depth)


def gen_corpus(seed: int, count: int, depth: int) -> list:
    """``count`` closed well-typed terms of ground type, deterministic in ``seed``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        ty = rng.choice(GROUND)
        out.append((TermGen(rng).comp((), ty, depth), ty))
    return out


@dataclass(frozen=True)
class Pair:
    left: object
    right: object
    type: object
    kind: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "type": str(self.type), "left": pretty(self.left), "right": pretty(self.right)}


def drop_instance(rng: random.Random, depth: int, ty=None) -> Pair:
    """``let x = new in e`` against ``e`` with ``x`` not free in ``e``."""
    g = TermGen(rng)
    ty = ty or rng.choice(GROUND + (NAME_TO_BOOL,))
    e = g.comp((), ty, depth)
    x = g.fresh("d")
    assert x not in free_vars(e)
    return Pair(Let(x, New(), e), e, ty, "drop")


def swap_instance(rng: random.Random, depth: int, ty=None) -> Pair:
    """``let x = new in let y = new in e`` against the same with the allocations swapped."""
    g = TermGen(rng)
    ty = ty or rng.choice(GROUND + (NAME_TO_BOOL,))
    x, y = g.fresh("a"), g.fresh("b")
    ctx = ((x, NAME), (y, NAME))
    if ty == NAME and rng.random() < 0.3:
        e = Ret(Var(rng.choice((x, y))))
    else:
        e = g.comp(ctx, ty, depth)
    lhs = Let(x, New(), Let(y, New(), e))
    rhs = Let(y, New(), Let(x, New(), e))
    return Pair(lhs, rhs, ty, "swap")


def private_instance(rng: random.Random, depth: int) -> Pair:
    """A closure hiding a private name, against one that never sees it.

    ``let n = new in fun (x:name). if x = n then b else c`` is equivalent to
    ``fun (x:name). c`` whenever ``b`` and ``c`` are closed; with probability
    one half the right-hand side is perturbed so the pair is not equivalent.
    """
    g = TermGen(rng)
    n, x = g.fresh("n"), g.fresh("x")
    b = g.comp(((x, NAME),), BOOL, max(depth - 3, 1))
    c = g.comp(((x, NAME),), BOOL, max(depth - 3, 1))
    if rng.random() < 0.5:
        lhs = Let(n, New(), Ret(fun(x, NAME, Ret(Eq(Var(x), Var(n))))))
        rhs_body = Ret(BoolLit(False))
    else:
        lhs = Let(n, New(), Ret(fun(x, NAME, If(Eq(Var(x), Var(n)), b, c))))
        rhs_body = c
    kind = "private"
    if rng.random() < 0.5:
        rhs_body = If(Eq(Var(x), Var(x)), Ret(BoolLit(True)), rhs_body)
        kind = "private-perturbed"
    return Pair(lhs, Ret(fun(x, NAME, rhs_body)), NAME_TO_BOOL, kind)


def mutate(rng: random.Random, term):
    """Flip one boolean literal or bump one integer literal, if any."""
    sites = []

    def walk(t, path):
        if isinstance(t, (IntLit, BoolLit)):
            sites.append(path)
        for k, child in vars(t).items() if hasattr(t, "__dict__") else ():
            if hasattr(child, "__dataclass_fields__"):
                walk(child, path + (k,))

    walk(term, ())
    if not sites:
        return term
    target = rng.choice(sites)

    def rebuild(t, path):
        if not path:
            if isinstance(t, IntLit):
                return IntLit(t.value + 1)
            return BoolLit(not t.value)
        k = path[0]
        return type(t)(**{**vars(t), k: rebuild(getattr(t, k), path[1:])})

    return rebuild(term, target)


def gen_pairs(seed: int, count: int, depth: int = 5) -> list[Pair]:
    """A mixed corpus of same-type pairs: schema instances, mutations and independent draws."""
    rng = random.Random(seed)
    kinds = ("drop", "swap", "private", "mutant", "random", "same")
    out = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        if kind == "drop":
            out.append(drop_instance(rng, depth - 1))
        elif kind == "swap":
            out.append(swap_instance(rng, depth - 2))
        elif kind == "private":
            out.append(private_instance(rng, depth))
        else:
            ty = rng.choice(GROUND + (NAME_TO_BOOL,))
            e = gen_comp(rng, ty, depth)
            if kind == "mutant":
                out.append(Pair(e, mutate(rng, e), ty, kind))
            elif kind == "random":
                out.append(Pair(e, gen_comp(rng, ty, depth), ty, kind))
            else:
                out.append(Pair(e, e, ty, kind))
    return out
