"""Top-level equivalence checking with certificate emission and re-verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..abstract import BOT_PROOF, TBOT, eval_abstract, transport
from ..errors import FuelExhausted
from ..lang.pretty import pretty
from ..spans import identity_span, parametric_extensions
from ..worlds import EMPTY
from .direct import synth_tproof, verify_tproof
from .oracle import find_distinguisher
from .parametric import MonadT, ParamWitness, in_fragment, param_relate, verify_witness


@dataclass(frozen=True)
class Budgets:
    fuel: int = 1000
    ext: int = 1
    budget: int = 256
    depth: int = 4
    oracle_fuel: int = 500


@dataclass
class Equivalent:
    method: str
    certificate: Any
    details: dict = field(default_factory=dict)

    exit_code = 0

    def to_json(self) -> dict:
        return {"verdict": "equivalent", "method": self.method,
                "certificate": self.certificate.to_json(), **self.details}


@dataclass
class Distinguished:
    context: Any
    left: Any
    right: Any

    exit_code = 1

    def to_json(self) -> dict:
        return {"verdict": "distinguished", "context": pretty(self.context),
                "left": self.left, "right": self.right}


@dataclass
class Unknown:
    reason: str

    exit_code = 2

    def to_json(self) -> dict:
        return {"verdict": "unknown", "reason": self.reason}


Verdict = Equivalent | Distinguished | Unknown


def oracle_equiv(e, e2, ty, depth: int = 4, fuel: int = 500) -> Verdict:
    """Sound for distinguishing, silent (``Unknown``) otherwise."""
    found = find_distinguisher(e, e2, ty, depth, fuel)
    if found is None:
        return Unknown(f"no observation of depth <= {depth} distinguishes the terms")
    return Distinguished(*found)


def _direct(e, e2, ty, b: Budgets) -> Verdict:
    tv = eval_abstract(EMPTY, {}, e, b.fuel)
    tv2 = eval_abstract(EMPTY, {}, e2, b.fuel)
    if tv is TBOT or tv2 is TBOT:
        return Unknown("evaluation ran out of fuel")
    try:
        proof = synth_tproof(EMPTY, tv, tv2, ty, b.fuel, b.ext)
        if proof is None or proof is BOT_PROOF:
            return Unknown("no co-span proof equates the results")
        if not verify_tproof(EMPTY, tv, tv2, proof, ty, b.fuel, b.ext):
            raise AssertionError("synthesized proof failed verification")
    except FuelExhausted as exc:
        return Unknown(str(exc))
    return Equivalent("direct", proof)


def swept_spans(wit: ParamWitness, tv, tv2, ty, b: Budgets) -> list:
    """Re-relate the payloads above every small parametric extension of the witness span.

    Returns the list of spans checked; raises ``AssertionError`` if any fails.
    """
    inner = wit.inner
    checked = []
    for s2, sq in parametric_extensions(inner.span, b.ext):
        a, a2 = transport(sq.top, tv.value), transport(sq.bottom, tv2.value)
        if param_relate(s2, a, a2, ty, b.budget, b.fuel, b.ext) is None:
            raise AssertionError(f"relation not stable under extension to {s2}")
        checked.append(s2)
    return checked


def _parametric(e, e2, ty, b: Budgets) -> Verdict:
    tv = eval_abstract(EMPTY, {}, e, b.fuel)
    tv2 = eval_abstract(EMPTY, {}, e2, b.fuel)
    if tv is TBOT or tv2 is TBOT:
        return Unknown("evaluation ran out of fuel")
    start = identity_span(EMPTY)
    mt = MonadT(ty)
    try:
        wit = param_relate(start, tv, tv2, mt, b.budget, b.fuel, b.ext)
        if wit is None:
            return Unknown("no span relates the results within budget")
        if not verify_witness(start, tv, tv2, mt, wit, b.fuel, b.ext):
            raise AssertionError("witness failed re-verification")
        swept = swept_spans(wit, tv, tv2, ty, b)
    except FuelExhausted as exc:
        return Unknown(str(exc))
    return Equivalent("parametric", wit, {"swept": [s.to_json() for s in swept]})


def check_equivalence(e, e2, ty, method: str = "direct", budgets: Budgets = Budgets()) -> Verdict:
    """Decide (soundly, incompletely) whether two closed terms of type ``ty`` are equivalent.

    ``direct`` and ``parametric`` only certify; types outside the certificate
    fragment fall back to the oracle.
    """
    if method == "oracle" or not in_fragment(ty):
        return oracle_equiv(e, e2, ty, budgets.depth, budgets.oracle_fuel)
    if method == "direct":
        return _direct(e, e2, ty, budgets)
    if method == "parametric":
        return _parametric(e, e2, ty, budgets)
    raise ValueError(f"unknown method {method!r}")
