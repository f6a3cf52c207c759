"""Three ways of comparing a closure over a private name with a constant function.

    let n = new in fun (x:name). x = n      versus      fun (x:name). false

Run with ``python3 demos/private_name.py``.
"""
from nucalc.abstract import eval_abstract, tvalue_to_json
from nucalc.cli import render_certificate
from nucalc.equiv import check_equivalence, find_distinguisher, observations
from nucalc.gen import NAME_TO_BOOL
from nucalc.lang import parse_comp
from nucalc.worlds import EMPTY

LEFT = parse_comp("let n = new in fun (x:name). x = n")
RIGHT = parse_comp("fun (x:name). false")


def main():
    print("abstract results at the empty world:")
    for e in (LEFT, RIGHT):
        print("  ", tvalue_to_json(eval_abstract(EMPTY, {}, e, 100)))

    # a co-span proof has to equate the two closures on every name, including n itself
    direct = check_equivalence(LEFT, RIGHT, NAME_TO_BOOL, "direct")
    print("\ndirect:", direct.to_json())

    # no closed observation can get hold of n, but the search only shows that up to a depth
    n_obs = len(list(observations(NAME_TO_BOOL, 4)))
    print(f"\noracle: {n_obs} observations of depth <= 4,",
          "distinguisher:", find_distinguisher(LEFT, RIGHT, NAME_TO_BOOL, 4, 500))

    # a span can leave n out of its low point, so the closures only have to agree on shared names
    par = check_equivalence(LEFT, RIGHT, NAME_TO_BOOL, "parametric")
    print("\nparametric:", par.to_json()["verdict"])
    print(render_certificate(par.certificate))
    print(f"re-checked above {len(par.details['swept'])} extended spans")


if __name__ == "__main__":
    main()
