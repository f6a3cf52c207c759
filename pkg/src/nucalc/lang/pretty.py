"""Printing terms back to concrete syntax; ``parse_comp(pretty(e)) == e``."""
from __future__ import annotations

from .syntax import App, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var

# value contexts, loosest first
_TOP, _EQ, _SUM, _ATOM = range(4)


def pretty(term) -> str:
    if isinstance(term, (Ret, New, Let, App, If)):
        return _comp(term)
    return _value(term, _TOP)


def _value(v, ctx: int) -> str:
    if isinstance(v, Var):
        return v.name
    if isinstance(v, BoolLit):
        return "true" if v.value else "false"
    if isinstance(v, IntLit):
        return str(v.value)
    if isinstance(v, Plus):
        text = f"{_value(v.left, _SUM)} + {_value(v.right, _ATOM)}"
        return text if ctx <= _SUM else f"({text})"
    if isinstance(v, Eq):
        text = f"{_value(v.left, _SUM)} = {_value(v.right, _SUM)}"
        return text if ctx <= _EQ else f"({text})"
    if isinstance(v, Fix):
        if v.fname is None:
            text = f"fun ({v.xname}:{v.arg_type}). {_comp(v.body)}"
        else:
            text = f"fix {v.fname}({v.xname}:{v.arg_type}):{v.res_type}. {_comp(v.body)}"
        return text if ctx == _TOP else f"({text})"
    raise TypeError(f"not a value: {v!r}")


def _comp(e) -> str:
    if isinstance(e, Ret):
        return _value(e.value, _TOP)
    if isinstance(e, New):
        return "new"
    if isinstance(e, Let):
        return f"let {e.name} = {_comp(e.bound)} in {_comp(e.body)}"
    if isinstance(e, App):
        return f"{_value(e.fn, _ATOM)} {_value(e.arg, _ATOM)}"
    if isinstance(e, If):
        return f"if {_value(e.cond, _EQ)} then {_comp(e.then)} else {_comp(e.orelse)}"
    raise TypeError(f"not a computation: {e!r}")
