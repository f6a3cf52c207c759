"""Naive semantics: names are naturals and computations thread a name supply.

Recursion is bounded by *fuel*: every function application consumes one unit
and an application attempted with no fuel left diverges.  The evaluator is an
explicit-stack machine, so deep recursion does not hit Python's stack limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .errors import StuckTerm
from .lang.pretty import pretty
from .lang.syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var,
                          free_vars)


@dataclass(frozen=True)
class CInt:
    value: int


@dataclass(frozen=True)
class CBool:
    value: bool


@dataclass(frozen=True)
class CName:
    n: int


@dataclass(frozen=True)
class CClosure:
    fname: str | None
    xname: str
    body: object
    env: tuple  # sorted (variable, CValue) pairs for the free variables of the function


CValue = Union[CInt, CBool, CName, CClosure]
CEnv = Mapping[str, CValue]


class _Diverge:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Diverge"


DIVERGE = _Diverge()


@dataclass(frozen=True)
class Done:
    supply: int
    value: CValue


CResult = Union[_Diverge, Done]


def eval_value(env: CEnv, v) -> CValue:
    if isinstance(v, Var):
        try:
            return env[v.name]
        except KeyError:
            raise StuckTerm(f"unbound variable {v.name!r}") from None
    if isinstance(v, IntLit):
        return CInt(v.value)
    if isinstance(v, BoolLit):
        return CBool(v.value)
    if isinstance(v, Plus):
        a, b = eval_value(env, v.left), eval_value(env, v.right)
        if not (isinstance(a, CInt) and isinstance(b, CInt)):
            raise StuckTerm(f"+ applied to {a!r} and {b!r}")
        return CInt(a.value + b.value)
    if isinstance(v, Eq):
        a, b = eval_value(env, v.left), eval_value(env, v.right)
        if isinstance(a, CInt) and isinstance(b, CInt):
            return CBool(a.value == b.value)
        if isinstance(a, CName) and isinstance(b, CName):
            return CBool(a.n == b.n)
        raise StuckTerm(f"= applied to {a!r} and {b!r}")
    if isinstance(v, Fix):
        captured = tuple((x, eval_value(env, Var(x))) for x in sorted(free_vars(v)))
        return CClosure(v.fname, v.xname, v.body, captured)
    raise StuckTerm(f"not a value: {v!r}")


def _enter(f: CValue, arg: CValue) -> dict:
    if not isinstance(f, CClosure):
        raise StuckTerm(f"applying a non-function {f!r}")
    env = dict(f.env)
    if f.fname is not None:
        env[f.fname] = f
    env[f.xname] = arg
    return env


def eval_concrete(env: CEnv, e, supply: int, fuel: int) -> CResult:
    """Run ``e`` in ``env`` starting from name supply ``supply``."""
    if isinstance(e, (Var, BoolLit, IntLit, Fix, Plus, Eq)):
        e = Ret(e)
    env = dict(env)
    stack = []
    while True:
        if isinstance(e, Let):
            stack.append((e.name, e.body, env))
            e = e.bound
            continue
        if isinstance(e, App):
            f, a = eval_value(env, e.fn), eval_value(env, e.arg)
            env = _enter(f, a)
            if fuel <= 0:
                return DIVERGE
            fuel -= 1
            e = f.body
            continue
        if isinstance(e, If):
            c = eval_value(env, e.cond)
            if not isinstance(c, CBool):
                raise StuckTerm(f"if on non-boolean {c!r}")
            e = e.then if c.value else e.orelse
            continue
        if isinstance(e, Ret):
            result = eval_value(env, e.value)
        elif isinstance(e, New):
            result = CName(supply)
            supply += 1
        else:
            raise StuckTerm(f"not a computation: {e!r}")
        if not stack:
            return Done(supply, result)
        name, e, saved = stack.pop()
        env = {**saved, name: result}


def apply_closure(f: CValue, arg: CValue, supply: int, fuel: int) -> CResult:
    """``f arg`` from the given supply; the call itself costs one unit of fuel."""
    return eval_concrete({"f": f, "a": arg}, App(Var("f"), Var("a")), supply, fuel)


def computation(env: CEnv, e, fuel: int) -> Callable[[int], CResult]:
    """The denotation of ``e`` as a function of the initial supply."""
    return lambda supply: eval_concrete(env, e, supply, fuel)


def run(e, supply: int = 0, fuel: int = 1000) -> CResult:
    return eval_concrete({}, e, supply, fuel)


def has_type(v: CValue, ty) -> bool:
    """Whether ``v`` belongs to the concrete value class of ``ty``."""
    if ty == INT:
        return isinstance(v, CInt)
    if ty == BOOL:
        return isinstance(v, CBool)
    if ty == NAME:
        return isinstance(v, CName) and v.n >= 0
    if isinstance(ty, Arrow):
        return isinstance(v, CClosure)
    return False


def names_of(v: CValue) -> set[int]:
    if isinstance(v, CName):
        return {v.n}
    if isinstance(v, CClosure):
        out = set()
        for _, inner in v.env:
            out |= names_of(inner)
        return out
    return set()


def to_json(v: CValue):
    if isinstance(v, CInt):
        return {"int": v.value}
    if isinstance(v, CBool):
        return {"bool": v.value}
    if isinstance(v, CName):
        return {"name": v.n}
    return {"closure": closure_text(v.fname, v.xname, v.body), "env": {k: to_json(x) for k, x in v.env}}


def closure_text(fname, xname, body) -> str:
    head = f"fix {fname}({xname})" if fname else f"fun ({xname})"
    return f"{head}. {pretty(body)}"
