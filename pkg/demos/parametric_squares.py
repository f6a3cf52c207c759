"""Which extensions of a partial bijection count as parametric.

A span between two worlds reads as a partial bijection.  Extending both worlds
by a fresh name and linking the two fresh names is fine; linking a fresh name
with an old one is not.

Run with ``python3 demos/parametric_squares.py``.
"""
from nucalc.spans import Span, check_parametric_square, parametric_extensions
from nucalc.worlds import Injection, World

W3, W4 = World([0, 1, 2]), World([0, 1, 2, 3])
SOURCE = Span.from_pairs(W3, W3, {0: 1, 1: 2})
INCL = Injection.inclusion(W3, W4)
RIGHT = Injection(W3, W4, {0: 1, 1: 2, 2: 3})


def main():
    print("source pairs:", sorted(SOURCE.pairs()))
    for label, left in (("fresh linked to fresh", {0: 0, 1: 1, 2: 3}), ("old linked to fresh", {0: 0, 1: 1, 2: 2})):
        target = Span(W4, W4, W3, Injection(W3, W4, left), RIGHT)
        sq = check_parametric_square(INCL, INCL, SOURCE, target)
        verdict = f"parametric, mediating map {sq.mediating}" if sq else "not parametric"
        print(f"{label:>22}: pairs {sorted(target.pairs())} -> {verdict}")

    print("\nall extensions by at most one fresh name:")
    for s2, _ in parametric_extensions(SOURCE, 1):
        print(f"  {s2.left!r} <-> {s2.right!r}  pairs {sorted(s2.pairs())}")


if __name__ == "__main__":
    main()
