import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nucalc.abstract import (TBOT, ABool, AInt, AName, TDone, apply_at, eval_abstract, lives_at, mult,
                             support, t_transport, transport, tvalue_to_json, unit)
from nucalc.equiv import synth_tproof, verify_tproof
from nucalc.errors import WorldMismatch
from nucalc.gen import TermGen
from nucalc.lang import parse_comp
from nucalc.lang.syntax import BOOL, GROUND, INT, NAME, Let, New, Ret, Var
from nucalc.worlds import EMPTY, Injection, World, compose, is_minimal_pullback, complete_span_minimal, world

import fixlaws
from samplers import sample_injection, sample_world


def inj(dom, cod, pairs):
    return Injection(World(dom), World(cod), dict(pairs))


# transport

def test_transport_renames_names_only():
    u = inj([0], [0, 1], {0: 1})
    assert transport(u, AName(0)) == AName(1)
    assert transport(u, AInt(3)) == AInt(3)
    with pytest.raises(WorldMismatch):
        transport(u, AName(1))


def test_transport_moves_closures_and_their_environment():
    res = eval_abstract(EMPTY, {}, parse_comp("let n = new in fun (x:name). x = n"), 10)
    f = res.value
    g = transport(inj([0], [3, 4], {0: 4}), f)
    assert g.world == {3, 4}
    assert g.env == (("n", AName(4)),)
    assert lives_at(g, World([3, 4]))
    with pytest.raises(WorldMismatch):
        transport(Injection.identity([7]), f)


@given(st.randoms(use_true_random=False))
def test_transport_is_functorial(rng):
    w = sample_world(rng)
    u = sample_injection(rng, w)
    v = sample_injection(rng, u.cod)
    for n in w:
        a = AName(n)
        assert transport(Injection.identity(w), a) == a
        assert transport(compose(v, u), a) == transport(v, transport(u, a))


# the monad

def test_t_transport_reproduces_worked_completion():
    # an element over {0} that allocated two names, moved along 0 ↦ 1 into {0,1}
    u = inj([0], [0, 1], {0: 1})
    tv = TDone(World([0, 1, 2]), AName(2))
    out = t_transport(u, tv)
    sq = complete_span_minimal(u, Injection.inclusion([0], [0, 1, 2]))
    assert is_minimal_pullback(sq)
    assert sq.right_up == inj([0, 1, 2], [0, 1, 2, 3], {0: 1, 1: 2, 2: 3})
    assert out == TDone(World([0, 1, 2, 3]), AName(3))


def test_t_transport_identity_and_bottom():
    tv = TDone(World([0, 1]), AName(1))
    assert t_transport(Injection.identity([0]), tv) == tv
    assert t_transport(Injection.identity([0]), TBOT) is TBOT
    with pytest.raises(WorldMismatch):
        t_transport(Injection.identity([5]), tv)


def test_unit_and_multiplication():
    w = World([0])
    assert unit(w, AInt(1)) == TDone(w, AInt(1))
    inner = TDone(World([0, 1, 2]), AName(2))
    assert mult(w, TDone(World([0, 1]), inner)) == inner
    assert mult(w, TBOT) is TBOT
    assert mult(w, TDone(World([0, 1]), TBOT)) is TBOT
    assert mult(w, unit(w, inner)) == inner


# evaluation

def test_new_allocates_above_the_maximum():
    assert eval_abstract(EMPTY, {}, New(), 5) == TDone(World([0]), AName(0))
    assert eval_abstract(World([5]), {}, New(), 5) == TDone(World([5, 6]), AName(6))


def test_let_binds_after_unit():
    assert eval_abstract(EMPTY, {}, parse_comp("let x = new in 42"), 5) == TDone(World([0]), AInt(42))


def test_abstract_countdown_matches_concrete():
    e = parse_comp("(fix f(x:int):bool. if x = 0 then true else f (x + -1)) 3")
    assert eval_abstract(EMPTY, {}, e, 10) == TDone(EMPTY, ABool(True))
    assert eval_abstract(EMPTY, {}, e, 3) is TBOT
    assert eval_abstract(EMPTY, {}, parse_comp("(fix f(x:int):int. 7) 0"), 0) is TBOT
    assert eval_abstract(EMPTY, {}, parse_comp("(fix f(x:int):int. 7) 0"), 1) == TDone(EMPTY, AInt(7))


def test_environment_is_carried_into_larger_worlds():
    env = {"a": AName(0)}
    e = parse_comp("let b = new in let g = fun (x:name). x = a in g b")
    assert eval_abstract(World([0]), env, e, 10) == TDone(World([0, 1]), ABool(False))


def test_apply_at_costs_one_unit():
    f = eval_abstract(EMPTY, {}, parse_comp("fun (x:name). true"), 5).value
    w = World([0])
    assert apply_at(w, transport(Injection.inclusion(EMPTY, w), f), AName(0), 0) is TBOT
    assert apply_at(w, transport(Injection.inclusion(EMPTY, w), f), AName(0), 1) == TDone(w, ABool(True))


def test_support_and_json():
    tv = eval_abstract(EMPTY, {}, parse_comp("let a = new in let b = new in fun (x:name). x = b"), 5)
    assert support(tv.value) == {1}
    js = tvalue_to_json(tv)
    assert js["world"] == [0, 1] and js["value"]["env"] == {"b": {"name": 1}}
    assert tvalue_to_json(TBOT) == {"status": "diverge"}


# properties

@st.composite
def terms_in_context(draw, max_depth=6):
    """A ground-type term over name variables bound to names of a random world."""
    rng = draw(st.randoms(use_true_random=False))
    w = sample_world(rng, 4)
    names = sorted(w)
    ctx = tuple((f"n{i}", NAME) for i in range(len(names)))
    env = {f"n{i}": AName(n) for i, n in enumerate(names)}
    ty = rng.choice(GROUND)
    e = TermGen(rng).comp(ctx, ty, draw(st.integers(1, max_depth)))
    return w, env, e, ty, rng


def _equal(w, tv, tv2, ty):
    if tv is TBOT or tv2 is TBOT:
        return tv is tv2
    proof = synth_tproof(w, tv, tv2, ty)
    return proof is not None and verify_tproof(w, tv, tv2, proof, ty)


@given(terms_in_context())
@settings(max_examples=200)
def test_results_extend_the_world(case):
    w, env, e, ty, _ = case
    tv = eval_abstract(w, env, e, 300)
    if tv is not TBOT:
        assert w <= tv.world
        assert lives_at(tv.value, tv.world)


@given(terms_in_context(), st.integers(0, 30))
@settings(max_examples=200)
def test_fuel_monotonicity(case, fuel):
    w, env, e, _, _ = case
    tv = eval_abstract(w, env, e, fuel)
    if tv is not TBOT:
        assert eval_abstract(w, env, e, fuel + 50) == tv


@given(terms_in_context())
@settings(max_examples=200)
def test_naturality_of_evaluation(case):
    w, env, e, ty, rng = case
    u = sample_injection(rng, w, 3)
    moved = t_transport(u, eval_abstract(w, env, e, 300))
    direct = eval_abstract(u.cod, {k: transport(u, a) for k, a in env.items()}, e, 300)
    assert _equal(u.cod, moved, direct, ty)


@given(terms_in_context(4), st.randoms(use_true_random=False))
@settings(max_examples=150)
def test_monad_laws(case, rng):
    w, env, m, ty, _ = case
    g = TermGen(rng)
    ctx = tuple((k, NAME) for k in env)
    # left unit: let r = return a in k  ~  k with r bound to a
    if env:
        first = sorted(env)[0]
        k_body = g.comp(ctx + (("r", NAME),), BOOL, 3)
        lhs = eval_abstract(w, env, Let("r", Ret(Var(first)), k_body), 300)
        assert lhs == eval_abstract(w, {**env, "r": env[first]}, k_body, 300)
    # right unit: let r = m in return r  ~  m
    assert eval_abstract(w, env, Let("r", m, Ret(Var("r"))), 300) == eval_abstract(w, env, m, 300)
    # associativity
    n_body = g.comp(ctx + (("r", ty),), INT, 3)
    p_body = g.comp(ctx + (("s", INT),), BOOL, 3)
    nested = Let("s", Let("r", m, n_body), p_body)
    flat = Let("r", m, Let("s", n_body, p_body))
    assert _equal(w, eval_abstract(w, env, nested, 300), eval_abstract(w, env, flat, 300), BOOL)


# fixpoint laws

def test_fixpoint_unfolding_costs_exactly_one_call():
    rng = random.Random(3)
    for _ in range(5):
        body, res = fixlaws.sample_functional(rng)
        for arg in fixlaws.PROBES:
            lhs, rhs = fixlaws.unfold_pairs(body, res, arg)
            for fuel in range(15):
                assert eval_abstract(EMPTY, {}, lhs, fuel) == eval_abstract(EMPTY, {}, rhs, fuel + 1)


@pytest.mark.parametrize("seed", range(4))
def test_power_law(seed):
    body, res = fixlaws.sample_functional(random.Random(seed))
    for arg in fixlaws.PROBES:
        for n in (2, 3):
            assert fixlaws.same_result(*fixlaws.power_pair(body, res, n, arg), res)


@pytest.mark.parametrize("arg", range(4))
def test_hand_built_fixpoint_laws(arg):
    assert fixlaws.same_result(*fixlaws.dinaturality_pair(arg), INT)
    assert fixlaws.same_result(*fixlaws.uniformity_premise_pair(arg), INT)
    assert fixlaws.same_result(*fixlaws.uniformity_pair(arg), INT)
    assert fixlaws.same_result(*fixlaws.diagonal_pair(arg), INT)
    assert fixlaws.same_result(*fixlaws.amalgamation_pair(arg, True), INT)
    assert fixlaws.same_result(*fixlaws.amalgamation_pair(arg, False), INT)


def test_world_helper():
    assert world(0, 1) == World([0, 1])
