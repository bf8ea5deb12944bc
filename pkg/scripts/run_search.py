#!/usr/bin/env python3
"""Enumerate maximal intersecting families over a small (n, k) grid and
report per-index degree maxima alongside the applicable theorem bounds."""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from degree_forge.bounds import BOUND_IDS, BoundSpec, evaluate
from degree_forge.cli import _jsonable
from degree_forge.search import max_degree_profile


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--t", type=int, default=1)
    ap.add_argument("--restrict", default="all", choices=("all", "shifted"))
    ap.add_argument("--workers", type=int,
                    default=int(os.environ.get("DEGREE_FORGE_WORKERS", "1")))
    args = ap.parse_args()

    for n in args.n:
        for k in args.k:
            if n < 2 * k:
                continue
            rep = max_degree_profile(n, k, args.t, restrict=args.restrict,
                                     workers=args.workers)
            bounds = {}
            for sid in BOUND_IDS:
                try:
                    res = evaluate(BoundSpec(sid, n, k, t=args.t, ell=2, tau=3))
                except Exception:
                    continue
                if res.applicable and res.target and res.target[0] == "d":
                    bounds[sid] = {"index": res.target[1], "bound": res.bound}
            print(json.dumps({
                "n": n, "k": k, "t": args.t, "restrict": args.restrict,
                "families": rep.families_enumerated,
                "per_index_max": {str(i): rep.per_index_max[i]
                                  for i in sorted(rep.per_index_max)},
                "applicable_degree_bounds": _jsonable(bounds),
                "wall_time": f"{rep.wall_time:.2f}s",
            }, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
