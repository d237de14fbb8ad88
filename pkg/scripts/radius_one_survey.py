"""Survey growth-series radius of convergence over clique complexes of small graphs.

For every graph on up to N vertices (networkx atlas) report whether W(t) has
radius of convergence one, and whether the clique complex is a join of a
cross-polytope and a simplex. The implication radius-one => join structure is
checked; counterexamples are printed.
"""

import argparse
import warnings

from gammacalc.corpus import clique_corpus
from gammacalc.coxeter import growth_series, is_crosspolytope_join_simplex, radius_one_check
from gammacalc.realroots import ToleranceAmbiguity


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-nodes", type=int, default=6)
    ap.add_argument("--tol", type=float, default=1e-9)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()

    total = radius_one = structured = bad = ambiguous = 0
    for name, X in clique_corpus(args.max_nodes):
        total += 1
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ToleranceAmbiguity)
            r1 = radius_one_check(X, args.tol)
        ambiguous += bool(caught)
        s = is_crosspolytope_join_simplex(X)
        radius_one += r1
        structured += s
        if r1 and not s:
            bad += 1
            print("violation:", name)
        if args.verbose:
            W = growth_series(X).rat
            print(f"{name}\n    den = {W.den}  radius_one={r1}  cross*simplex={s}")
    print(f"graphs: {total}  radius one: {radius_one}  cross*simplex: {structured}  "
          f"violations: {bad}  tolerance warnings: {ambiguous}")


if __name__ == "__main__":
    main()
