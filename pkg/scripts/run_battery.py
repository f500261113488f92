#!/usr/bin/env python3
"""Run the three height algorithms across a grid of groups and parabolics
and print a table: group, theta, lambda, dim, height, denominator bound
verdicts, timing.  Any disagreement between methods aborts the run."""

import argparse
import sys
import time

sys.path.insert(0, "src")

from flagheight.height import denominator_check, height_all_methods
from flagheight.parabolic import build_parabolic
from flagheight.rootsys import build_root_system

DEFAULT_GROUPS = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]


def instances(groups, max_coord):
    for spec in groups:
        rs = build_root_system(spec)
        yield spec, frozenset(), tuple([1] * rs.rank)
        if max_coord >= 2:
            for i in range(rs.rank):
                lam = tuple(2 if j == i else 1 for j in range(rs.rank))
                yield spec, frozenset(), lam
        for i in range(rs.rank):
            theta = frozenset(range(rs.rank)) - {i}
            for s in range(1, max_coord + 1):
                yield spec, theta, tuple(
                    s if j == i else 0 for j in range(rs.rank))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--groups", default=",".join(DEFAULT_GROUPS))
    ap.add_argument("--max-coord", type=int, default=2)
    args = ap.parse_args()

    print(f"{'group':8}{'theta':12}{'lambda':14}{'dim':>4}  "
          f"{'height':>22}  {'2c-2':>5}{'c-1':>5}  {'ms':>6}")
    for spec, theta, lam in instances(args.groups.split(","), args.max_coord):
        rs = build_root_system(spec)
        pd = build_parabolic(rs, theta)
        t0 = time.monotonic()
        res = height_all_methods(pd, lam)
        ms = 1000 * (time.monotonic() - t0)
        c = rs.coxeter_number
        print(f"{spec:8}"
              f"{','.join(str(i + 1) for i in sorted(theta)) or '-':12}"
              f"{','.join(map(str, lam)):14}{pd.dim:>4}  "
              f"{str(res.value):>22}  "
              f"{'ok' if denominator_check(res, 2 * c - 2) else 'NO':>5}"
              f"{'ok' if denominator_check(res, c - 1) else 'no':>5}  "
              f"{ms:>6.1f}")


if __name__ == "__main__":
    main()
