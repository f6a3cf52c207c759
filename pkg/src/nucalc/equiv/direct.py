"""Co-span certificates for equality of monadic results at a common world."""
from __future__ import annotations

from ..abstract import (BOT_PROOF, TBOT, AClosure, ABool, AInt, AName, GroundEq, TProof, TValue, apply_at,
                        support, transport)
from ..errors import FuelExhausted, ShapeMismatch
from ..lang.syntax import BOOL, INT, NAME, Arrow
from ..worlds import Injection, World

NAME_TO_BOOL = Arrow(NAME, BOOL)
FRAGMENT = (INT, BOOL, NAME, NAME_TO_BOOL)

DEFAULT_FUEL = 1000


def tabulate(f: AClosure, fuel: int = DEFAULT_FUEL, ext: int = 1) -> tuple:
    """Truth table of a ``name -> bool`` closure over its world plus ``ext`` fresh names.

    The fresh names stand for every name the closure has not seen; by
    equivariance one of them is enough to cover all such arguments.
    """
    w = f.world
    wider = w.extend(ext)
    if ext:
        f = transport(Injection.inclusion(w, wider), f)
    table = []
    for n in sorted(wider):
        res = apply_at(wider, f, AName(n), fuel)
        if res is TBOT:
            raise FuelExhausted(f"closure diverged on name {n} within fuel {fuel}")
        if not isinstance(res.value, ABool):
            raise ShapeMismatch(f"closure returned {res.value!r}, not a boolean")
        table.append((n, res.value.value))
    return tuple(table)


def ground_evidence(a, ty, fuel: int = DEFAULT_FUEL, ext: int = 1):
    """The canonical :class:`GroundEq` evidence carried by a value of ``ty``."""
    if ty == INT and isinstance(a, AInt):
        return a.value
    if ty == BOOL and isinstance(a, ABool):
        return a.value
    if ty == NAME and isinstance(a, AName):
        return a.n
    if ty == NAME_TO_BOOL and isinstance(a, AClosure):
        return tabulate(a, fuel, ext)
    raise ShapeMismatch(f"{a!r} is not a value of type {ty}")


def _check_fragment(ty):
    if ty not in FRAGMENT:
        raise ShapeMismatch(f"type {ty} is outside the certificate fragment")


def verify_tproof(w, tv: TValue, tv2: TValue, proof, ty, fuel: int = DEFAULT_FUEL, ext: int = 1) -> bool:
    """Check a co-span proof that ``tv`` and ``tv2`` (both over ``w``) are equal."""
    _check_fragment(ty)
    w = World(w)
    if tv is TBOT or tv2 is TBOT:
        return tv is TBOT and tv2 is TBOT and proof is BOT_PROOF
    if not isinstance(proof, TProof):
        return False
    x, x2 = proof.x, proof.x2
    if x.dom != tv.world or x2.dom != tv2.world or x.cod != x2.cod:
        raise ShapeMismatch("proof legs do not match the results' worlds")
    if not (w <= tv.world and w <= tv2.world):
        raise ShapeMismatch(f"results do not extend {w!r}")
    if any(x(n) != x2(n) for n in w):
        return False
    if proof.p.type != ty:
        return False
    left = ground_evidence(transport(x, tv.value), ty, fuel, ext)
    right = ground_evidence(transport(x2, tv2.value), ty, fuel, ext)
    return left == right == proof.p.evidence


def synth_tproof(w, tv: TValue, tv2: TValue, ty, fuel: int = DEFAULT_FUEL, ext: int = 1):
    """Search for a co-span proof of ``tv ~ tv2``; ``None`` when there is none.

    ``x`` is the inclusion of ``w1`` into the apex.  ``x2`` is the identity on
    ``w`` and sends fresh names of ``w1'`` either onto unused fresh names of
    ``w1`` or onto new apex names.  Only names in the payload's support are
    searched over; the others cannot affect the payload and are placed
    canonically.
    """
    _check_fragment(ty)
    w = World(w)
    if tv is TBOT or tv2 is TBOT:
        return BOT_PROOF if (tv is TBOT and tv2 is TBOT) else None
    w1, w2 = tv.world, tv2.world
    left_fresh = sorted(w1 - w)
    right_fresh = sorted(w2 - w)
    relevant = [n for n in right_fresh if n in support(tv2.value)]
    idle = [n for n in right_fresh if n not in relevant]
    first_new = w1.max() + 1

    def build(assign: dict[int, int]) -> TProof | None:
        table = {n: n for n in w}
        table.update(assign)
        used = set(assign.values())
        spare = [m for m in left_fresh if m not in used]
        new = first_new + sum(1 for m in used if m >= first_new)
        for n in idle:
            if spare:
                table[n] = spare.pop(0)
            else:
                table[n] = new
                new += 1
        apex = World(set(w1) | set(table.values()))
        x = Injection.inclusion(w1, apex)
        x2 = Injection(w2, apex, table)
        left = ground_evidence(transport(x, tv.value), ty, fuel, ext)
        right = ground_evidence(transport(x2, tv2.value), ty, fuel, ext)
        if left != right:
            return None
        return TProof(x, x2, GroundEq(ty, left))

    def search(i: int, assign: dict[int, int]):
        if i == len(relevant):
            return build(assign)
        used = set(assign.values())
        new_count = sum(1 for m in used if m >= first_new)
        options = [m for m in left_fresh if m not in used] + [first_new + new_count]
        for m in options:
            assign[relevant[i]] = m
            found = search(i + 1, assign)
            if found is not None:
                return found
            del assign[relevant[i]]
        return None

    return search(0, {})
