"""Direct certificates for dropping an unused name and for swapping two allocations.

Run with ``python3 demos/drop_and_swap.py``.
"""
import random

from nucalc.abstract import eval_abstract
from nucalc.cli import render_certificate
from nucalc.equiv import check_equivalence, verify_tproof
from nucalc.gen import drop_instance, swap_instance
from nucalc.lang import parse_comp, pretty
from nucalc.lang.syntax import NAME
from nucalc.worlds import EMPTY


def show(left, right, ty):
    print(f"{pretty(left)}\n  vs {pretty(right)}   : {ty}")
    v = check_equivalence(left, right, ty, "direct")
    print("  verdict:", v.to_json()["verdict"])
    if hasattr(v, "certificate"):
        tv, tv2 = eval_abstract(EMPTY, {}, left, 1000), eval_abstract(EMPTY, {}, right, 1000)
        print("  re-verified:", verify_tproof(EMPTY, tv, tv2, v.certificate, ty))
        print("  " + render_certificate(v.certificate).replace("\n", "\n  "))
    print()


def main():
    # the two programs return different concrete names; the proof renames one onto the other
    show(parse_comp("let x = new in let y = new in x"), parse_comp("let y = new in let x = new in x"), NAME)
    rng = random.Random(2)
    for make in (drop_instance, swap_instance):
        p = make(rng, 3)
        show(p.left, p.right, p.type)


if __name__ == "__main__":
    main()
