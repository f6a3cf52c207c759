"""Program corpora shared by the equivalence tests and the acceptance gate."""
import random

from nucalc.abstract import eval_abstract
from nucalc.equiv import MonadT, param_relate
from nucalc.errors import FuelExhausted
from nucalc.gen import NAME_TO_BOOL, Pair, TermGen, drop_instance, swap_instance
from nucalc.lang import parse_comp
from nucalc.lang.syntax import BOOL, INT, NAME, Let, New
from nucalc.spans import identity_span
from nucalc.worlds import EMPTY

FRAGMENT = (INT, BOOL, NAME, NAME_TO_BOOL)

PRIVATE = parse_comp("let n = new in fun (x:name). x = n")
FALSE_FN = parse_comp("fun (x:name). false")


def pad(e, k: int, tag: str = "d"):
    """``e`` preceded by ``k`` unused allocations."""
    for i in range(k):
        e = Let(f"{tag}{i}", New(), e)
    return e


def drop_instances(seed: int, count: int, depth: int = 4) -> list:
    rng = random.Random(seed)
    types = (INT, BOOL, NAME, NAME_TO_BOOL)
    return [drop_instance(rng, depth, types[i % len(types)]) for i in range(count)]


def swap_instances(seed: int, count: int, depth: int = 3) -> list:
    """Swap instances; the first is the bare name instance ``let x = new in let y = new in x``."""
    rng = random.Random(seed)
    out = [Pair(parse_comp("let x = new in let y = new in x"), parse_comp("let y = new in let x = new in x"),
                NAME, "swap")]
    types = (INT, BOOL, NAME, NAME_TO_BOOL)
    while len(out) < count:
        out.append(swap_instance(rng, depth, types[len(out) % len(types)]))
    return out


def related_triples(seed: int, count: int) -> list:
    """Triples ``(e, e2, e3, ty)`` whose neighbours are related above the identity span at the empty world."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        i = len(out)
        if i % 5 == 4:
            chain = [PRIVATE, FALSE_FN, pad(FALSE_FN, rng.randint(1, 2))]
            rng.shuffle(chain)
            out.append((*chain, NAME_TO_BOOL))
            continue
        ty = FRAGMENT[i % len(FRAGMENT)]
        if i % 5 in (2, 3):
            p = swap_instance(rng, 3, ty)
            triple = [p.left, p.right, pad(rng.choice((p.left, p.right)), rng.randint(1, 2), "c")]
            rng.shuffle(triple)
        else:
            e = TermGen(rng).comp((), ty, rng.randint(2, 4))
            ks = [rng.randint(0, 2) for _ in range(3)]
            triple = [pad(e, k, tag) for k, tag in zip(ks, ("a", "b", "c"))]
        tvs = [eval_abstract(EMPTY, {}, t, 500) for t in triple]
        mt = MonadT(ty)
        start = identity_span(EMPTY)
        try:
            related = all(param_relate(start, tvs[j], tvs[j + 1], mt) is not None for j in range(2))
        except FuelExhausted:
            continue
        if related:
            out.append((*triple, ty))
    return out
