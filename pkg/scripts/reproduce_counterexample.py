"""Rebuild the flag 5-sphere counterexample for m = 0..M and print a summary table."""

import argparse
import json

from gammacalc.constructions import verify_counterexample


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--ghs", action="store_true", help="also verify homology (slow)")
    ap.add_argument("--json", action="store_true", help="print full reports as JSON")
    args = ap.parse_args()

    reports = [verify_counterexample(m, with_ghs=args.ghs) for m in range(args.max_m + 1)]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
        return
    print(f"{'m':>2}  {'f':<42} {'gamma':<16} real-rooted  sturm  disc  contracts")
    for r in reports:
        f = ",".join(map(str, r.f.coeffs))
        g = ",".join(map(str, r.gamma.coeffs))
        ok = "ok" if all(r.contracts().values()) else "FAIL"
        print(f"{r.m:>2}  {f:<42} {g:<16} {str(r.real_rooted):<11}  "
              f"{r.distinct_real_roots}/{r.squarefree_degree}    {r.gamma_discriminant:<5} {ok}")


if __name__ == "__main__":
    main()
