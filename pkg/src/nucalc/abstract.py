"""World-indexed semantics with the dynamic allocation monad.

A computation run at world ``w`` either diverges (:data:`TBOT`) or returns
``TDone(w1, a)`` with ``w ⊆ w1`` and ``a`` a value living at ``w1``.  ``new``
at ``w`` returns the name ``max(w) + 1`` (with ``max(∅) = -1``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Union

from .concrete import closure_text
from .errors import StuckTerm, WorldMismatch
from .lang.syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var,
                          free_vars)
from .worlds import Injection, World, complete_span_minimal


@dataclass(frozen=True)
class AInt:
    value: int


@dataclass(frozen=True)
class ABool:
    value: bool


@dataclass(frozen=True)
class AName:
    n: int


@dataclass(frozen=True)
class AClosure:
    fname: str | None
    xname: str
    body: object
    env: tuple  # sorted (variable, AValue) pairs, all living at ``world``
    world: World


AValue = Union[AInt, ABool, AName, AClosure]
AEnv = Mapping[str, AValue]


class _TBot:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TBot"


TBOT = _TBot()


@dataclass(frozen=True)
class TDone:
    world: World
    value: AValue


TValue = Union[_TBot, TDone]


@dataclass(frozen=True)
class GroundEq:
    """Evidence that two transported payloads coincide at the apex.

    ``evidence`` is the shared literal (int/bool), the shared apex name, or
    the shared truth table (sorted ``(name, bool)`` pairs) for ``name -> bool``.
    """

    type: Any
    evidence: Any


@dataclass(frozen=True)
class TProof:
    """A co-span ``x: w1 -> apex <- w1' :x2`` with payload evidence ``p``."""

    x: Injection
    x2: Injection
    p: GroundEq

    @property
    def apex(self) -> World:
        return self.x.cod

    def to_json(self) -> dict:
        ev = self.p.evidence
        return {
            "kind": "tproof",
            "left": self.x.dom.to_json(),
            "right": self.x2.dom.to_json(),
            "apex": self.apex.to_json(),
            "x": self.x.to_json(),
            "x'": self.x2.to_json(),
            "type": str(self.p.type),
            "evidence": [list(p) for p in ev] if isinstance(ev, tuple) else ev,
        }


class _BotProof:
    """The unique proof that ⊥ equals ⊥."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BotProof"

    def to_json(self):
        return {"kind": "bottom"}


BOT_PROOF = _BotProof()


def support(a: AValue) -> set[int]:
    """Names occurring in ``a``."""
    if isinstance(a, AName):
        return {a.n}
    if isinstance(a, AClosure):
        out = set()
        for _, inner in a.env:
            out |= support(inner)
        return out
    return set()


def lives_at(a: AValue, w: World) -> bool:
    if isinstance(a, AName):
        return a.n in w
    if isinstance(a, AClosure):
        return a.world == w and all(lives_at(x, w) for _, x in a.env)
    return True


def transport(u: Injection, a: AValue) -> AValue:
    """Move ``a`` from ``u.dom`` to ``u.cod`` by renaming its names."""
    if isinstance(a, (AInt, ABool)):
        return a
    if isinstance(a, AName):
        if a.n not in u.dom:
            raise WorldMismatch(f"name {a.n} is not in {u.dom!r}")
        return AName(u(a.n))
    if isinstance(a, AClosure):
        if a.world != u.dom:
            raise WorldMismatch(f"closure lives at {a.world!r}, not {u.dom!r}")
        env = tuple((k, transport(u, x)) for k, x in a.env)
        return AClosure(a.fname, a.xname, a.body, env, u.cod)
    raise TypeError(f"not an abstract value: {a!r}")


def transport_env(u: Injection, env: AEnv) -> dict:
    return {k: transport(u, v) for k, v in env.items()}


def t_transport(u: Injection, tv: TValue) -> TValue:
    """Monad action on morphisms, through the canonical minimal pullback."""
    if tv is TBOT:
        return TBOT
    if not u.dom <= tv.world:
        raise WorldMismatch(f"{tv.world!r} does not extend {u.dom!r}")
    incl = Injection.inclusion(u.dom, tv.world)
    sq = complete_span_minimal(u, incl)
    # left leg: q ↪ q1 (inclusion); right leg: u1: w1 -> q1
    return TDone(sq.apex, transport(sq.right_up, tv.value))


def unit(w: World, a: AValue) -> TDone:
    return TDone(World(w), a)


def mult(w: World, tt: TValue) -> TValue:
    """``(w1, (w2, v)) ↦ (w2, v)``; the inner value is a TValue over ``w1``."""
    if tt is TBOT or tt.value is TBOT:
        return TBOT
    return tt.value


def eval_value(w: World, env: AEnv, v) -> AValue:
    if isinstance(v, Var):
        try:
            return env[v.name]
        except KeyError:
            raise StuckTerm(f"unbound variable {v.name!r}") from None
    if isinstance(v, IntLit):
        return AInt(v.value)
    if isinstance(v, BoolLit):
        return ABool(v.value)
    if isinstance(v, Plus):
        a, b = eval_value(w, env, v.left), eval_value(w, env, v.right)
        if not (isinstance(a, AInt) and isinstance(b, AInt)):
            raise StuckTerm(f"+ applied to {a!r} and {b!r}")
        return AInt(a.value + b.value)
    if isinstance(v, Eq):
        a, b = eval_value(w, env, v.left), eval_value(w, env, v.right)
        if isinstance(a, AInt) and isinstance(b, AInt):
            return ABool(a.value == b.value)
        if isinstance(a, AName) and isinstance(b, AName):
            return ABool(a.n == b.n)
        raise StuckTerm(f"= applied to {a!r} and {b!r}")
    if isinstance(v, Fix):
        captured = tuple((x, eval_value(w, env, Var(x))) for x in sorted(free_vars(v)))
        return AClosure(v.fname, v.xname, v.body, captured, w)
    raise StuckTerm(f"not a value: {v!r}")


def eval_abstract(w, env: AEnv, e, fuel: int) -> TValue:
    """Evaluate ``e`` at world ``w``; the result is a TValue over ``w``."""
    w = World(w)
    if isinstance(e, (Var, BoolLit, IntLit, Fix, Plus, Eq)):
        e = Ret(e)
    env = dict(env)
    stack = []
    while True:
        if isinstance(e, Let):
            stack.append((e.name, e.body, env, w))
            e = e.bound
            continue
        if isinstance(e, App):
            f, a = eval_value(w, env, e.fn), eval_value(w, env, e.arg)
            if not isinstance(f, AClosure):
                raise StuckTerm(f"applying a non-function {f!r}")
            if fuel <= 0:
                return TBOT
            fuel -= 1
            env = dict(f.env)
            if f.fname is not None:
                env[f.fname] = f
            env[f.xname] = a
            e = f.body
            continue
        if isinstance(e, If):
            c = eval_value(w, env, e.cond)
            if not isinstance(c, ABool):
                raise StuckTerm(f"if on non-boolean {c!r}")
            e = e.then if c.value else e.orelse
            continue
        if isinstance(e, Ret):
            result = eval_value(w, env, e.value)
        elif isinstance(e, New):
            n = w.max() + 1
            w = World(w | {n})
            result = AName(n)
        else:
            raise StuckTerm(f"not a computation: {e!r}")
        if not stack:
            return TDone(w, result)
        # strength: carry the saved environment along the inclusion into w
        name, e, saved, w0 = stack.pop()
        if w0 != w:
            saved = transport_env(Injection.inclusion(w0, w), saved)
        env = {**saved, name: result}


def apply_at(w, f: AValue, arg: AValue, fuel: int) -> TValue:
    """Apply a closure living at ``w`` to ``arg``; costs one unit of fuel."""
    return eval_abstract(w, {"f": f, "a": arg}, App(Var("f"), Var("a")), fuel)


def has_type(a: AValue, ty, w: World) -> bool:
    if ty == INT:
        return isinstance(a, AInt)
    if ty == BOOL:
        return isinstance(a, ABool)
    if ty == NAME:
        return isinstance(a, AName) and a.n in w
    if isinstance(ty, Arrow):
        return isinstance(a, AClosure) and a.world == w
    return False


def to_json(a: AValue):
    if isinstance(a, AInt):
        return {"int": a.value}
    if isinstance(a, ABool):
        return {"bool": a.value}
    if isinstance(a, AName):
        return {"name": a.n}
    return {"closure": closure_text(a.fname, a.xname, a.body), "world": a.world.to_json(),
            "env": {k: to_json(x) for k, x in a.env}}


def tvalue_to_json(tv: TValue) -> dict:
    if tv is TBOT:
        return {"status": "diverge"}
    return {"status": "done", "world": tv.world.to_json(), "value": to_json(tv.value)}
