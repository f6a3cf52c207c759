"""Syntax, parsing, printing and typing of the language."""
from .parser import parse, parse_comp, parse_type, parse_value, tokenize
from .pretty import pretty
from .syntax import (BOOL, GROUND, INT, NAME, App, Arrow, BoolLit, BoolT, Comp, Eq, Fix, If, IntLit, IntT, Let,
                     NameT, New, Plus, Ret, Type, Value, Var, as_comp, depth, free_vars, fun)
from .typecheck import typecheck, typecheck_comp, typecheck_value

__all__ = [
    "parse", "parse_comp", "parse_type", "parse_value", "tokenize", "pretty",
    "BOOL", "GROUND", "INT", "NAME", "App", "Arrow", "BoolLit", "BoolT", "Comp", "Eq", "Fix", "If", "IntLit",
    "IntT", "Let", "NameT", "New", "Plus", "Ret", "Type", "Value", "Var", "as_comp", "depth", "free_vars", "fun",
    "typecheck", "typecheck_comp", "typecheck_value",
]
