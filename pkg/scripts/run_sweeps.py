#!/usr/bin/env python3
"""Run every registered inequality sweep over its default hypothesis grid
and print one summary line per sweep; exits non-zero on any violation."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from degree_forge.bounds import SWEEP_IDS, inequality_sweep
from degree_forge.cli import DEFAULT_GRIDS, parse_grid


def main() -> int:
    failed = False
    for sid in SWEEP_IDS:
        spec = DEFAULT_GRIDS[sid]
        grid = parse_grid(spec) if isinstance(spec, str) else spec
        rep = inequality_sweep(sid, grid)
        status = "ok" if rep.passed else f"{len(rep.violations)} VIOLATIONS"
        print(f"{sid:6s} checked={rep.points_checked:5d} "
              f"skipped={rep.out_of_hypothesis:5d} {status}")
        for v in rep.violations:
            print(f"       violation at {v.params}: lhs={v.lhs} rhs={v.rhs}")
        failed = failed or not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
