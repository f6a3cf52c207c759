"""Equivalence certification: co-span proofs, span-indexed witnesses,
realizability and a brute-force observation oracle."""
from .check import (Budgets, Distinguished, Equivalent, Unknown, Verdict, check_equivalence, oracle_equiv,
                    swept_spans)
from .direct import FRAGMENT, NAME_TO_BOOL, ground_evidence, synth_tproof, tabulate, verify_tproof
from .oracle import find_distinguisher, observations, observe
from .parametric import (BOT, STAR, MonadT, ParamWitness, in_fragment, param_compose, param_relate, relate_tables,
                         reverse_witness, verify_witness)
from .realize import Bounds, realizes

__all__ = [
    "Budgets", "Distinguished", "Equivalent", "Unknown", "Verdict", "check_equivalence", "oracle_equiv",
    "swept_spans", "FRAGMENT", "NAME_TO_BOOL", "ground_evidence", "synth_tproof", "tabulate", "verify_tproof",
    "find_distinguisher", "observations", "observe", "BOT", "STAR", "MonadT", "ParamWitness", "in_fragment",
    "param_compose", "param_relate", "relate_tables", "reverse_witness", "verify_witness", "Bounds", "realizes",
]
