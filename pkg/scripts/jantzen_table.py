#!/usr/bin/env python3
"""Print the prime-indexed character combination on the right-hand side of
the sum formula for a given group and weight, one line per (prime, weight),
and confirm the structural identities."""

import argparse
import sys

sys.path.insert(0, "src")

from flagheight.jantzen import jantzen_rhs, lambda0_component
from flagheight.parabolic import build_parabolic
from flagheight.rootsys import build_root_system


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default="B2")
    ap.add_argument("--lambda", dest="lam", default="1,1")
    args = ap.parse_args()

    rs = build_root_system(args.group)
    lam = tuple(int(t) for t in args.lam.split(","))
    pd = build_parabolic(rs, set())
    combo = jantzen_rhs(pd, lam)

    if combo.is_zero():
        print(f"{args.group} lambda={lam}: zero combination")
        return
    for p in sorted(combo.terms):
        for mu, c in sorted(combo.terms[p].items()):
            print(f"log {p:>3}  weight {','.join(map(str, mu)):12} {c:+d}")
    zero = lambda0_component(combo, pd, lam) == {}
    print(f"lambda0 component zero: {zero}")


if __name__ == "__main__":
    main()
