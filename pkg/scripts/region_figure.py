"""Write the degree-4 (h1, h2) geography as CSV, one row per integer point.

Columns: h1, h2, cd = h(-1), sr = discriminant of the u-quadratic,
class tag, and whether the cone construction realizes the point.
"""

import argparse
import sys
from collections import Counter

from gammacalc.constructions import region_csv, region_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--h1-max", type=int, default=30)
    ap.add_argument("--h2-max", type=int, default=250)
    ap.add_argument("-o", "--output", default="region.csv")
    args = ap.parse_args()

    rows = region_grid(args.h1_max, args.h2_max)
    with open(args.output, "w") as fh:
        fh.write(region_csv(rows))
    tally = Counter(r["class"] for r in rows)
    realizable = sum(r["realizable"] for r in rows)
    print(f"wrote {len(rows)} rows to {args.output}", file=sys.stderr)
    for tag, n in sorted(tally.items()):
        print(f"  {tag:<22} {n}", file=sys.stderr)
    print(f"  realizable by cones     {realizable}", file=sys.stderr)


if __name__ == "__main__":
    main()
