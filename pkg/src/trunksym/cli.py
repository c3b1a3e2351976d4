"""Command-line surface.

One verb per concept: partition facts, the Mullineux conjugate, cores,
the special/good classifiers, enumeration, characters, decomposition
matrices and the cross-check suites.  Partitions are written "4,2,1"
(empty string for the zero partition).  Exit codes: 0 success, 1 a
property check failed (with witnesses in the report), 2 usage or
precondition errors.  Progress and warnings go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .partitions import (
    format_partition,
    l_core,
    parse_partition,
    regularity,
    residue_content,
    restricted_decompose,
    transpose,
)
from .mullineux import (
    is_edge_l_connected,
    l_edge,
    mullineux,
    mullineux_components,
    mullineux_length,
    mullineux_symbol,
)
from .classify import enumerate_special, is_m_good, is_m_special
from .characters import truncated_tensor_char
from .suites import SUITES, run_suite, suite_names


def _dump(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parts_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("parts", help='partition as "a1,a2,...,ak" ("" for zero)')


def _cmd_info(args) -> int:
    lam = parse_partition(args.parts)
    l = args.l
    regular, restricted = regularity(lam, l)
    head, tail = restricted_decompose(lam, l)
    edge = l_edge(lam, l)
    info = {
        "partition": list(lam),
        "degree": lam.degree,
        "length": len(lam),
        "transpose": list(transpose(lam)),
        "l": l,
        "l_regular": regular,
        "l_restricted": restricted,
        "restricted_part": list(head),
        "scaled_part": list(tail),
        "residue_content": list(residue_content(lam, l)),
        "l_core": list(l_core(lam, l)),
        "edge_size": edge.size,
        "edge_connected": is_edge_l_connected(lam, l),
        "components": [list(c) for c in mullineux_components(lam, l)] if lam else [],
        "mullineux": list(mullineux(lam, l)) if regular else None,
        "mullineux_length": mullineux_length(lam, l) if regular else None,
    }
    _dump(info)
    return 0


def _cmd_mull(args) -> int:
    lam = parse_partition(args.parts)
    symbol = mullineux_symbol(lam, args.l)
    _dump(
        {
            "partition": list(lam),
            "l": args.l,
            "mullineux": list(mullineux(lam, args.l)),
            "symbol": symbol.to_json(),
        }
    )
    return 0


def _cmd_core(args) -> int:
    lam = parse_partition(args.parts)
    _dump({"partition": list(lam), "l": args.l, "core": list(l_core(lam, args.l))})
    return 0


def _cmd_special(args) -> int:
    lam = parse_partition(args.parts)
    verdict = is_m_special(lam, args.m, args.l)
    payload = verdict.to_json()
    if not args.witness:
        payload["witness"] = None
    _dump(payload)
    return 0


def _cmd_good(args) -> int:
    lam = parse_partition(args.parts)
    oracle = None
    if args.oracle:
        oracle = cache_mod.load_or_compute(args.l, lam.degree, cache_dir=args.cache)
    verdict = is_m_good(lam, args.m, args.l, oracle=oracle)
    _dump(verdict.to_json())
    return 0


def _cmd_enumerate_special(args) -> int:
    for lam in enumerate_special(args.m, args.l, args.degree, restricted_only=args.restricted):
        print(format_partition(lam))
    return 0


def _cmd_char(args) -> int:
    expansion = truncated_tensor_char(args.m, args.n, args.l, args.degree)
    _dump(
        {
            "m": args.m,
            "n": args.n,
            "l": args.l,
            "degree": args.degree,
            "schur_expansion": expansion.to_json(),
        }
    )
    return 0


def _cmd_decomp_matrix(args) -> int:
    mat = cache_mod.load_or_compute(
        args.l,
        args.degree,
        cache_dir=args.cache,
        force=args.force,
        allow_large=args.unsafe_large,
        progress=lambda msg: print(msg, file=sys.stderr),
    )
    _dump(cache_mod.matrix_payload(mat))
    return 0


def _cmd_crosscheck(args) -> int:
    names = suite_names() if args.suite == "all" else [args.suite]
    overrides = {
        "ls": tuple(int(x) for x in args.l.split(",")) if args.l else None,
        "max_degree": args.max_degree,
        "max_m": args.max_m,
        "max_l": args.max_l,
        "max_n": args.max_n,
        "max_r": args.max_r,
        "oracle_degree": args.oracle_degree,
        "orders": args.orders,
        "seed": args.seed,
        "cache_dir": args.cache,
    }
    reports = []
    failed = False
    for name in names:
        defaults = SUITES[name][1]
        applicable = {k: v for k, v in overrides.items() if v is not None and k in defaults}
        print(f"running {name} ...", file=sys.stderr)
        report = run_suite(name, **applicable)
        reports.append(report)
        status = "ok" if report.ok else f"FAILED ({len(report.failures)} failures)"
        print(f"{name}: {report.checked} checks, {status}", file=sys.stderr)
        failed = failed or not report.ok
    payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    else:
        _dump(payload)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trunksym",
        description="Exact partition combinatorics for truncated symmetric power tensor factors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="partition facts at one quantum characteristic")
    _parts_argument(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("mull", help="Mullineux conjugate and symbol")
    _parts_argument(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_mull)

    p = sub.add_parser("core", help="l-core")
    _parts_argument(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_core)

    p = sub.add_parser("special", help="m-special classifier")
    _parts_argument(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="include a decomposition witness")
    p.set_defaults(fn=_cmd_special)

    p = sub.add_parser("good", help="m-good classifier (tri-state)")
    _parts_argument(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with the decomposition matrix")
    p.add_argument("--cache", default=None, help="matrix cache directory")
    p.set_defaults(fn=_cmd_good)

    p = sub.add_parser("enumerate-special", help="all m-special partitions of a degree")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--restricted", action="store_true", help="restricted partitions only")
    p.set_defaults(fn=_cmd_enumerate_special)

    p = sub.add_parser("char", help="Schur expansion of a truncated tensor character slice")
    p.add_argument("--m", type=int, required=True, help="tensor factors")
    p.add_argument("--n", type=int, required=True, help="variables")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=_cmd_char)

    p = sub.add_parser("decomp-matrix", help="decomposition matrix for one degree")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cache", default=None, help="matrix cache directory")
    p.add_argument("--force", action="store_true", help="recompute even when cached")
    p.add_argument("--unsafe-large", action="store_true", help="ignore the degree cap")
    p.set_defaults(fn=_cmd_decomp_matrix)

    p = sub.add_parser("crosscheck", help="run an invariant suite (or all)")
    p.add_argument("--suite", required=True, choices=suite_names() + ["all"])
    p.add_argument("--l", default=None, help='comma list of characteristics, e.g. "2,3"')
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-l", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--oracle-degree", type=int, default=None)
    p.add_argument("--orders", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cache", default=None, help="matrix cache directory")
    p.add_argument("--json", default=None, help="write the report to this path")
    p.set_defaults(fn=_cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
