"""Syntax-directed typing for values and computations."""
from __future__ import annotations

from typing import Mapping

from ..errors import TypeCheckError, UnboundVariable
from .syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Type, Var)

Context = Mapping[str, Type]


def typecheck_value(ctx: Context, v) -> Type:
    if isinstance(v, Var):
        if v.name not in ctx:
            raise UnboundVariable(f"unbound variable {v.name!r}", term=v)
        return ctx[v.name]
    if isinstance(v, BoolLit):
        return BOOL
    if isinstance(v, IntLit):
        return INT
    if isinstance(v, Plus):
        for side in (v.left, v.right):
            t = typecheck_value(ctx, side)
            if t != INT:
                raise TypeCheckError(f"operand of + has type {t}", term=side, expected=INT, actual=t)
        return INT
    if isinstance(v, Eq):
        left = typecheck_value(ctx, v.left)
        right = typecheck_value(ctx, v.right)
        if left != right:
            raise TypeCheckError(f"= compares {left} with {right}", term=v, expected=left, actual=right)
        if left not in (INT, NAME):
            raise TypeCheckError(f"= is only defined on int and name, not {left}", term=v, actual=left)
        return BOOL
    if isinstance(v, Fix):
        inner = dict(ctx)
        if v.fname is not None:
            if v.res_type is None:
                raise TypeCheckError("recursive function needs a result type", term=v)
            inner[v.fname] = Arrow(v.arg_type, v.res_type)
        inner[v.xname] = v.arg_type
        body = typecheck_comp(inner, v.body)
        if v.res_type is not None and body != v.res_type:
            raise TypeCheckError(f"body has type {body}, declared {v.res_type}", term=v.body,
                                 expected=v.res_type, actual=body)
        return Arrow(v.arg_type, body)
    raise TypeCheckError(f"not a value: {v!r}", term=v)


def typecheck_comp(ctx: Context, e) -> Type:
    if isinstance(e, Ret):
        return typecheck_value(ctx, e.value)
    if isinstance(e, New):
        return NAME
    if isinstance(e, Let):
        bound = typecheck_comp(ctx, e.bound)
        return typecheck_comp({**ctx, e.name: bound}, e.body)
    if isinstance(e, App):
        fn = typecheck_value(ctx, e.fn)
        if not isinstance(fn, Arrow):
            raise TypeCheckError(f"applying a value of type {fn}", term=e.fn, actual=fn)
        arg = typecheck_value(ctx, e.arg)
        if arg != fn.arg:
            raise TypeCheckError(f"argument has type {arg}, expected {fn.arg}", term=e.arg,
                                 expected=fn.arg, actual=arg)
        return fn.res
    if isinstance(e, If):
        cond = typecheck_value(ctx, e.cond)
        if cond != BOOL:
            raise TypeCheckError(f"condition has type {cond}", term=e.cond, expected=BOOL, actual=cond)
        then = typecheck_comp(ctx, e.then)
        orelse = typecheck_comp(ctx, e.orelse)
        if then != orelse:
            raise TypeCheckError(f"branches have types {then} and {orelse}", term=e, expected=then, actual=orelse)
        return then
    if isinstance(e, (Var, BoolLit, IntLit, Fix, Plus, Eq)):
        return typecheck_value(ctx, e)
    raise TypeCheckError(f"not a computation: {e!r}", term=e)


def typecheck(term, ctx: Context | None = None) -> Type:
    return typecheck_comp(ctx or {}, term)
