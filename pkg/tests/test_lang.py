import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nucalc.errors import NuSyntaxError, TypeCheckError, UnboundVariable
from nucalc.gen import TermGen, gen_corpus
from nucalc.lang import parse, parse_comp, parse_type, parse_value, pretty, typecheck
from nucalc.lang.syntax import (BOOL, INT, NAME, App, Arrow, BoolLit, Eq, Fix, If, IntLit, Let, New, Plus, Ret, Var,
                                depth, free_vars)

TYPES = st.sampled_from([INT, BOOL, NAME, Arrow(NAME, BOOL), Arrow(INT, INT)])


@st.composite
def closed_terms(draw, max_depth=6):
    rng = draw(st.randoms(use_true_random=False))
    ty = draw(TYPES)
    d = draw(st.integers(2, max_depth))
    return TermGen(rng).comp((), ty, d), ty, d


def test_parses_basic_forms():
    assert parse_comp("new") == New()
    assert parse_comp("let x = new in x") == Let("x", New(), Ret(Var("x")))
    assert parse_comp("f x") == App(Var("f"), Var("x"))
    assert parse_value("1 + 2 + 3") == Plus(Plus(IntLit(1), IntLit(2)), IntLit(3))
    assert parse_value("x + -1 = 0") == Eq(Plus(Var("x"), IntLit(-1)), IntLit(0))
    assert parse_comp("if b then 1 else 2") == If(Var("b"), Ret(IntLit(1)), Ret(IntLit(2)))


def test_fun_is_nonrecursive_fix():
    f = parse_value("fun (x:name). x = x")
    assert f == Fix(None, "x", NAME, None, Ret(Eq(Var("x"), Var("x"))))
    assert typecheck(f) == Arrow(NAME, BOOL)


def test_fix_needs_both_annotations():
    f = parse_value("fix f(n:int):bool. if n = 0 then true else f (n + -1)")
    assert f.fname == "f" and f.res_type == BOOL
    with pytest.raises(NuSyntaxError):
        parse_value("fix f(n:int). n")


def test_fix_body_extends_right():
    e = parse_comp("fun (x:int). let y = x in y")
    assert isinstance(e, Ret) and isinstance(e.value.body, Let)


def test_arrow_types_associate_right():
    assert parse_type("int -> bool -> name") == Arrow(INT, Arrow(BOOL, NAME))
    assert parse_type("(int -> bool) -> name") == Arrow(Arrow(INT, BOOL), NAME)
    assert str(Arrow(Arrow(INT, BOOL), NAME)) == "(int -> bool) -> name"
    assert parse_type("name->bool") == Arrow(NAME, BOOL)


def test_parse_unwraps_values():
    assert parse("42") == IntLit(42)
    assert parse("new") == New()


@pytest.mark.parametrize("text", ["let x = in x", "let = new in x", "(1", "fun x. x", "1 2 3", "if x then 1", "@"])
def test_syntax_errors(text):
    with pytest.raises(NuSyntaxError):
        parse_comp(text)


def test_syntax_error_reports_offset():
    with pytest.raises(NuSyntaxError) as err:
        parse_comp("let x = in x")
    assert err.value.pos == 8


@pytest.mark.parametrize("text, ty", [
    ("new", NAME),
    ("let x = new in let y = new in x = y", BOOL),
    ("let n = new in fun (x:name). x = n", Arrow(NAME, BOOL)),
    ("(fix f(n:int):bool. if n = 0 then true else f (n + -1)) 3", BOOL),
    ("fun (f:int -> int). f 1", Arrow(Arrow(INT, INT), INT)),
    ("let x = 1 + 2 in x = 3", BOOL),
])
def test_typechecks(text, ty):
    assert typecheck(parse_comp(text)) == ty


@pytest.mark.parametrize("text", [
    "true + 1",
    "true = false",
    "if 1 then 2 else 3",
    "if true then 1 else false",
    "1 2",
    "(fun (x:int). x) true",
    "fix f(n:int):bool. n",
    "let x = new in x + 1",
])
def test_type_errors(text):
    with pytest.raises(TypeCheckError):
        typecheck(parse_comp(text))


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        typecheck(parse_comp("x"))
    assert typecheck(parse_comp("x"), {"x": INT}) == INT


def test_depth_counts_ast_nesting():
    assert depth(parse_comp("true")) == 1
    assert depth(parse_comp("fun (x:bool). x")) == 2
    assert depth(parse_comp("let x = new in x")) == 2
    assert depth(parse_comp("let y = new in x y")) == 3


def test_free_vars():
    e = parse_comp("let x = new in fun (y:name). if x = y then z else w")
    assert free_vars(e) == {"z", "w"}
    assert free_vars(parse_value("fix f(n:int):int. f n")) == frozenset()


@given(closed_terms())
@settings(max_examples=300)
def test_pretty_then_parse_round_trips(case):
    e, _, _ = case
    assert parse_comp(pretty(e)) == e


@given(closed_terms())
@settings(max_examples=300)
def test_generated_terms_typecheck_within_depth(case):
    e, ty, d = case
    assert typecheck(e) == ty
    assert depth(e) <= d
    assert free_vars(e) == frozenset()


def test_pretty_parenthesizes_where_needed():
    e = App(Fix(None, "x", INT, None, Ret(Var("x"))), IntLit(1))
    assert pretty(e) == "(fun (x:int). x) 1"
    v = Plus(IntLit(1), Plus(IntLit(2), IntLit(3)))
    assert pretty(v) == "1 + (2 + 3)"
    assert parse_value(pretty(v)) == v
    c = If(Eq(IntLit(1), IntLit(2)), Ret(BoolLit(True)), Ret(BoolLit(False)))
    assert pretty(c) == "if 1 = 2 then true else false"


def test_corpus_at_depth_one_is_a_literal_or_new():
    for e, ty in gen_corpus(1, 30, 1):
        assert typecheck(e) == ty
        if ty == NAME:
            assert e == New()
        else:
            assert isinstance(e, Ret) and isinstance(e.value, (IntLit, BoolLit))


@given(st.integers(0, 10_000), st.integers(1, 6))
@settings(max_examples=50)
def test_corpus_is_deterministic_and_well_typed(seed, d):
    first = gen_corpus(seed, 5, d)
    assert [pretty(e) for e, _ in first] == [pretty(e) for e, _ in gen_corpus(seed, 5, d)]
    for e, ty in first:
        assert typecheck(e) == ty and depth(e) <= d
