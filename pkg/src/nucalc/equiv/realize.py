"""Bounded check of the realizability relation between the two semantics."""
from __future__ import annotations

from dataclasses import dataclass

from ..abstract import TBOT, AClosure, ABool, AInt, AName, TDone, apply_at, transport
from ..concrete import DIVERGE, CBool, CClosure, CInt, CName, apply_closure
from ..errors import HigherOrderArgument
from ..lang.syntax import BOOL, GROUND, INT, NAME, Arrow
from ..worlds import Injection, World
from .parametric import MonadT


@dataclass(frozen=True)
class Bounds:
    ext: int = 2
    fuel: int = 1000
    int_probe: tuple = (-1, 0, 1, 2)


def _arguments(ty, w1: World, bounds: Bounds):
    if ty == NAME:
        return [(CName(n), AName(n)) for n in sorted(w1)]
    if ty == BOOL:
        return [(CBool(b), ABool(b)) for b in (True, False)]
    if ty == INT:
        return [(CInt(i), AInt(i)) for i in bounds.int_probe]
    raise HigherOrderArgument(f"cannot enumerate arguments of type {ty}")


def realizes(cv, av, ty, w, bounds: Bounds = Bounds()) -> bool:
    """Does the concrete ``cv`` realize the abstract ``av`` at type ``ty`` and world ``w``?

    If ``av`` is a monadic result (``TBOT``/``TDone``) then ``cv`` is a
    concrete computation, either a function of the start supply or its result
    already run from ``max(w) + 1``.  Function types quantify over world
    extensions by up to ``bounds.ext`` names and over ground arguments only.
    """
    w = World(w)
    if isinstance(ty, MonadT):
        ty = ty.res
    if av is TBOT or isinstance(av, TDone):
        res = cv(w.max() + 1) if callable(cv) else cv
        if res is DIVERGE or av is TBOT:
            return res is DIVERGE and av is TBOT
        if not w <= av.world:
            return False
        return res.supply == av.world.max() + 1 and realizes(res.value, av.value, ty, av.world, bounds)

    if ty == INT:
        return isinstance(cv, CInt) and isinstance(av, AInt) and cv.value == av.value
    if ty == BOOL:
        return isinstance(cv, CBool) and isinstance(av, ABool) and cv.value == av.value
    if ty == NAME:
        return isinstance(cv, CName) and isinstance(av, AName) and cv.n == av.n
    if isinstance(ty, Arrow):
        if ty.arg not in GROUND:
            raise HigherOrderArgument(f"argument type {ty.arg} is not ground")
        if not (isinstance(cv, CClosure) and isinstance(av, AClosure)):
            return False
        for k in range(bounds.ext + 1):
            w1 = w.extend(k)
            g = transport(Injection.inclusion(w, w1), av)
            for carg, aarg in _arguments(ty.arg, w1, bounds):
                concrete = apply_closure(cv, carg, w1.max() + 1, bounds.fuel)
                abstract = apply_at(w1, g, aarg, bounds.fuel)
                if not realizes(concrete, abstract, ty.res, w1, bounds):
                    return False
        return True
    raise TypeError(f"unknown type {ty!r}")
