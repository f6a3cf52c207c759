"""Types and abstract syntax of the call-by-value language with ``new``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class IntT:
    def __str__(self):
        return "int"


@dataclass(frozen=True)
class BoolT:
    def __str__(self):
        return "bool"


@dataclass(frozen=True)
class NameT:
    def __str__(self):
        return "name"


@dataclass(frozen=True)
class Arrow:
    arg: "Type"
    res: "Type"

    def __str__(self):
        arg = f"({self.arg})" if isinstance(self.arg, Arrow) else str(self.arg)
        return f"{arg} -> {self.res}"


Type = Union[IntT, BoolT, NameT, Arrow]

INT = IntT()
BOOL = BoolT()
NAME = NameT()
GROUND = (INT, BOOL, NAME)


# values

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Fix:
    """``fix f(x:arg_type):res_type. body``.

    ``fname`` is ``None`` for the non-recursive ``fun (x:T). body`` form, in
    which case ``res_type`` is also ``None`` and is read off the body.
    """

    fname: Optional[str]
    xname: str
    arg_type: Type
    res_type: Optional[Type]
    body: "Comp"


@dataclass(frozen=True)
class Plus:
    left: "Value"
    right: "Value"


@dataclass(frozen=True)
class Eq:
    left: "Value"
    right: "Value"


Value = Union[Var, BoolLit, IntLit, Fix, Plus, Eq]


# computations

@dataclass(frozen=True)
class Ret:
    value: Value


@dataclass(frozen=True)
class New:
    pass


@dataclass(frozen=True)
class Let:
    name: str
    bound: "Comp"
    body: "Comp"


@dataclass(frozen=True)
class App:
    fn: Value
    arg: Value


@dataclass(frozen=True)
class If:
    cond: Value
    then: "Comp"
    orelse: "Comp"


Comp = Union[Ret, New, Let, App, If]

VALUE_NODES = (Var, BoolLit, IntLit, Fix, Plus, Eq)
COMP_NODES = (Ret, New, Let, App, If)


def fun(xname: str, arg_type: Type, body: Comp) -> Fix:
    return Fix(None, xname, arg_type, None, body)


def as_comp(term) -> Comp:
    return Ret(term) if isinstance(term, VALUE_NODES) else term


def free_vars(term) -> frozenset[str]:
    if isinstance(term, Var):
        return frozenset({term.name})
    if isinstance(term, (BoolLit, IntLit, New)):
        return frozenset()
    if isinstance(term, Fix):
        bound = {term.xname} | ({term.fname} if term.fname else set())
        return free_vars(term.body) - bound
    if isinstance(term, (Plus, Eq)):
        return free_vars(term.left) | free_vars(term.right)
    if isinstance(term, Ret):
        return free_vars(term.value)
    if isinstance(term, Let):
        return free_vars(term.bound) | (free_vars(term.body) - {term.name})
    if isinstance(term, App):
        return free_vars(term.fn) | free_vars(term.arg)
    if isinstance(term, If):
        return free_vars(term.cond) | free_vars(term.then) | free_vars(term.orelse)
    raise TypeError(f"not a term: {term!r}")


def depth(term) -> int:
    """AST depth; atoms have depth 1."""
    if isinstance(term, (Var, BoolLit, IntLit, New)):
        return 1
    if isinstance(term, Fix):
        return 1 + depth(term.body)
    if isinstance(term, (Plus, Eq)):
        return 1 + max(depth(term.left), depth(term.right))
    if isinstance(term, Ret):
        return depth(term.value)
    if isinstance(term, Let):
        return 1 + max(depth(term.bound), depth(term.body))
    if isinstance(term, App):
        return 1 + max(depth(term.fn), depth(term.arg))
    if isinstance(term, If):
        return 1 + max(depth(term.cond), depth(term.then), depth(term.orelse))
    raise TypeError(f"not a term: {term!r}")
