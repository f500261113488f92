"""Command-line front end.

Subcommands: height, jantzen-rhs, char, dim, bwb, scan.  Simple roots are
numbered 1..rank in the deterministic ordering printed by
--print-numbering; --theta and --lambda refer to that numbering.

Exit codes: 0 success, 2 argument or parse error, 3 invalid mathematical
input (non-ample weight, bad localization vector, out-of-range indices),
4 enumeration size cap exceeded, 5 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from .cache import ENV_CACHE_DIR, cache_cosets
from .charpoly import freudenthal, weyl_dim
from .height import (
    MethodDisagreement,
    NotRegularY,
    denominator_check,
    height_all_methods,
    height_fixed_point,
    height_harmo_bott,
    height_substitution,
)
from .jantzen import jantzen_rhs, lambda0_component
from .parabolic import NotAmple, build_parabolic
from .rootsys import InvalidCartanSpec, build_root_system, parse_cartan_spec
from .weyl import DEFAULT_CAP, GroupTooLarge, coset_representatives, \
    to_dominant_dotted

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_CAP = 4
EXIT_CROSSCHECK = 5


class _ParseError(ValueError):
    pass


def _parse_int_list(text: str, what: str) -> list:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise _ParseError(f"cannot parse {what} {text!r} as comma list "
                          "of integers") from None


def _parse_fraction_list(text: str, what: str) -> list:
    if text is None or text.strip() == "":
        return []
    try:
        return [Fraction(tok) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise _ParseError(f"cannot parse {what} {text!r} as comma list "
                          "of rationals") from None


def _rational(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _theta_zero_based(theta_1based, rank: int) -> frozenset:
    for i in theta_1based:
        if not 1 <= i <= rank:
            raise ValueError(f"theta index {i} out of range 1..{rank}")
    return frozenset(i - 1 for i in theta_1based)


def _require_lambda(lam, rank: int):
    if len(lam) != rank:
        raise ValueError(f"lambda has {len(lam)} coordinates, rank is {rank}")
    return tuple(lam)


def _get_cosets(args, rs, theta):
    cache_dir = args.cache_dir or os.environ.get(ENV_CACHE_DIR)
    if cache_dir:
        return cache_cosets(cache_dir, rs, theta, args.cap)
    return coset_representatives(rs, theta, args.cap)


def _emit(doc: dict, fmt: str, rows=None) -> str:
    """Render a result document: json verbatim, csv from the flat rows,
    text as aligned key/value lines."""
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = rows if rows is not None else [_flatten(doc)]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        return buf.getvalue()
    width = max(len(k) for k in doc)
    return "".join(f"{k.ljust(width)}  {_textval(v)}\n"
                   for k, v in doc.items())


def _flatten(doc: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, f"{key}_"))
        else:
            out[key] = _textval(v)
    return out


def _textval(v):
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


# ---------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------


def _height_doc(args, rs, theta, lam) -> dict:
    pd = build_parabolic(rs, theta)
    Y = _parse_fraction_list(args.y, "--y") or None
    if Y is not None and len(Y) != rs.rank:
        raise ValueError(f"--y has {len(Y)} coordinates, rank is {rs.rank}")
    start = time.monotonic()
    cosets = None
    if args.method in ("all", "fixed-point", "harmo-bott"):
        cosets = _get_cosets(args, rs, theta)
    if args.method == "all":
        res = height_all_methods(pd, lam, Y, args.cap, cosets)
        agreed = True
    elif args.method == "substitution":
        res = height_substitution(pd, lam)
        agreed = None
    elif args.method == "fixed-point":
        res = height_fixed_point(pd, lam, Y, args.cap, cosets)
        agreed = None
    else:
        res = height_harmo_bott(pd, lam, Y, args.cap, cosets)
        agreed = None
    elapsed_ms = int(1000 * (time.monotonic() - start))
    c = rs.coxeter_number
    doc = {
        "group": str(rs.spec),
        "theta": sorted(i + 1 for i in theta),
        "lambda": list(lam),
        "dim": pd.dim,
        "height": _rational(res.value),
        "methods_agreed": agreed,
        "coxeter": c,
        "cor82_ok": denominator_check(res, 2 * c - 2),
        "conjecture_ok": denominator_check(res, c - 1),
        "elapsed_ms": elapsed_ms,
    }
    return doc


def _jantzen_doc(args, rs, theta, lam) -> dict:
    pd = build_parabolic(rs, theta)
    combo = jantzen_rhs(pd, lam)
    lam0 = lambda0_component(combo, pd, lam)
    return {
        "group": str(rs.spec),
        "theta": sorted(i + 1 for i in theta),
        "lambda": list(lam),
        "primes": {str(p): [{"weight": list(mu), "coeff": c}
                            for mu, c in sorted(bucket.items())]
                   for p, bucket in sorted(combo.terms.items())},
        "lambda0_component_zero": not lam0,
    }


def _char_doc(args, rs, lam) -> dict:
    if not rs.is_dominant(lam):
        raise ValueError(f"lambda {list(lam)} is not dominant")
    table = freudenthal(rs, lam)
    return {
        "group": str(rs.spec),
        "lambda": list(lam),
        "dim": sum(table.values()),
        "weights": [{"weight": list(mu), "mult": m}
                    for mu, m in sorted(table.items(), reverse=True)],
    }


def _dim_doc(args, rs, lam) -> dict:
    if not rs.is_dominant(lam):
        raise ValueError(f"lambda {list(lam)} is not dominant")
    return {"group": str(rs.spec), "lambda": list(lam),
            "dim": weyl_dim(rs, lam)}


def _bwb_doc(args, rs, lam) -> dict:
    res = to_dominant_dotted(rs, lam)
    doc = {"group": str(rs.spec), "lambda": list(lam)}
    if res is None:
        doc.update({"singular": True, "degree": None,
                    "word": None, "lambda0": None, "dim": None})
    else:
        w, lam0 = res
        doc.update({"singular": False, "degree": w.length,
                    "word": [i + 1 for i in w.word],
                    "lambda0": list(lam0), "dim": weyl_dim(rs, lam0)})
    return doc


def _scan_docs(args, rs) -> list:
    """Heights of all maximal parabolics: theta = Pi minus {i}, lam = om_i."""
    docs = []
    for i in range(rs.rank):
        theta = frozenset(range(rs.rank)) - {i}
        lam = tuple(1 if j == i else 0 for j in range(rs.rank))
        docs.append(_height_doc(args, rs, theta, lam))
    return docs


def build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagheight",
        description="Exact heights of flag varieties from root-system data.")
    sub = parser.add_subparsers(dest="command", required=False)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True,
                        help="Cartan spec, e.g. A3, B2xA1, D4")
    common.add_argument("--output", choices=["json", "csv", "text"],
                        default="json")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="abort if a Weyl enumeration exceeds this size")
    common.add_argument("--cache-dir", default=None,
                        help=f"coset cache root (default ${ENV_CACHE_DIR})")
    common.add_argument("--print-numbering", action="store_true",
                        help="print the simple-root numbering table and exit")

    lam_opt = argparse.ArgumentParser(add_help=False)
    lam_opt.add_argument("--lambda", dest="lam", default="",
                         help="weight in fundamental-weight coordinates, "
                              "comma list")

    theta_opt = argparse.ArgumentParser(add_help=False)
    theta_opt.add_argument("--theta", default="",
                           help="1-based simple indices of the Levi, comma "
                                "list; empty for the Borel")

    p = sub.add_parser("height", parents=[common, theta_opt, lam_opt],
                       help="height of (G/P_theta, L_lambda)")
    p.add_argument("--method", default="all",
                   choices=["all", "substitution", "fixed-point",
                            "harmo-bott"])
    p.add_argument("--y", default="",
                   help="localization vector (alpha_i(Y) values), comma list")
    p.add_argument("--check-conjecture", action="store_true",
                   help="also print the conjectural denominator verdict")

    sub.add_parser("jantzen-rhs", parents=[common, theta_opt, lam_opt],
                   help="prime-indexed character table of the sum formula")
    sub.add_parser("char", parents=[common, lam_opt],
                   help="weight multiplicities of the irreducible module")
    sub.add_parser("dim", parents=[common, lam_opt],
                   help="dimension of the irreducible module")
    sub.add_parser("bwb", parents=[common, lam_opt],
                   help="dotted-action normal form (cohomology degree, "
                        "dominant weight)")
    p = sub.add_parser("scan", parents=[common],
                       help="heights of all maximal parabolics of a group")
    p.add_argument("--method", default="all",
                   choices=["all", "substitution", "fixed-point",
                            "harmo-bott"])
    p.add_argument("--y", default="")
    p.add_argument("--check-conjecture", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    if args.command is None:
        parser.print_help()
        return EXIT_PARSE

    try:
        rs = build_root_system(parse_cartan_spec(args.group))
    except InvalidCartanSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.print_numbering:
        print(rs.numbering_table())
        return EXIT_OK

    try:
        if args.command == "scan":
            docs = _scan_docs(args, rs)
            rows = [_flatten(d) for d in docs]
            if args.output == "json":
                print(json.dumps(docs, indent=2, sort_keys=True))
            elif args.output == "csv":
                sys.stdout.write(_emit(docs[0], "csv", rows))
            else:
                for d in docs:
                    sys.stdout.write(_emit(d, "text"))
                    print()
            return EXIT_OK

        lam_raw = _parse_int_list(args.lam, "--lambda")
        lam = _require_lambda(lam_raw, rs.rank)
        if args.command == "height":
            theta = _theta_zero_based(
                _parse_int_list(args.theta, "--theta"), rs.rank)
            doc = _height_doc(args, rs, theta, lam)
            if args.check_conjecture and args.output == "text":
                bound = rs.coxeter_number - 1
                doc["conjecture_note"] = (
                    f"prime powers in denom(2h) vs bound {bound}: "
                    f"{'ok' if doc['conjecture_ok'] else 'exceeded'}")
        elif args.command == "jantzen-rhs":
            theta = _theta_zero_based(
                _parse_int_list(args.theta, "--theta"), rs.rank)
            doc = _jantzen_doc(args, rs, theta, lam)
        elif args.command == "char":
            doc = _char_doc(args, rs, lam)
        elif args.command == "dim":
            doc = _dim_doc(args, rs, lam)
        else:
            doc = _bwb_doc(args, rs, lam)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except (NotAmple, NotRegularY, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH

    sys.stdout.write(_emit(doc, args.output))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
