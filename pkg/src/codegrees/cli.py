"""Command-line surface.

Exit codes: 0 for success (N/A reports included), 1 when a check
reports FAIL, 2 for usage, parse or data errors.  Output is
deterministic: identical invocations produce identical bytes.
"""

import argparse
import json
import sys

from .analysis import (FAIL, HypothesisNotMetError, check_lemma21, check_lemma22,
                       thm12_certificate, thm23_scan, verify_counterexample)
from .catalog import CatalogError, load_catalog
from .constructors import build_group, parse_group_spec
from .cyclotomic import render_pairs
from .dixon import char_table, kernel_of
from .groups import CapExceededError, DEFAULT_ORDER_CAP, conjugacy_classes
from .perms import cycle_notation
from .pseudo import (NotAbelianRealizableError, codegree, parse_abelian_type,
                     parse_pseudo, pseudo_algebra, reconstruct_abelian)


class CliError(Exception):
    """User-facing error: bad specs, bad files, bad arguments."""


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, CatalogError, CapExceededError, NotAbelianRealizableError,
            ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codegrees",
        description="Exact character tables, codegrees and pseudo-algebras "
                    "of small permutation groups.")
    parser.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                        help="largest group order that will be closed")
    parser.add_argument("--format", choices=("text", "machine"), default="text",
                        help="text output or one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the exact character table")
    p.add_argument("spec")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("pseudo", help="print the pseudo-algebra of a group")
    p.add_argument("spec")
    p.set_defaults(func=cmd_pseudo)

    p = sub.add_parser("compare", help="compare the pseudo-algebras of two groups")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", help="run a verification check")
    csub = p.add_subparsers(dest="check", required=True)

    c = csub.add_parser("lemma21", help="three character degrees are forced")
    c.add_argument("spec")
    c.add_argument("type")
    c.set_defaults(func=cmd_check_lemma21)

    c = csub.add_parser("lemma22", help="order and degree counts when cd = {1,p,p^2}")
    c.add_argument("spec")
    c.add_argument("type")
    c.set_defaults(func=cmd_check_lemma22)

    c = csub.add_parser("counterexample",
                        help="same pseudo-algebra, different order")
    c.add_argument("spec")
    c.add_argument("type")
    c.set_defaults(func=cmd_check_counterexample)

    c = csub.add_parser("thm12", help="two-case structure certificate")
    c.add_argument("spec")
    c.add_argument("p", type=int)
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_check_thm12)

    c = csub.add_parser("thm23", help="metacyclic scan over a catalog")
    c.add_argument("p", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--catalog", required=True)
    c.set_defaults(func=cmd_check_thm23)

    p = sub.add_parser("search", help="catalog entries matching a pseudo-algebra")
    p.add_argument("--catalog", required=True)
    p.add_argument("--against", required=True, metavar="SPEC")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reconstruct",
                       help="abelian type with the given pseudo-algebra, if any")
    p.add_argument("pairs")
    p.set_defaults(func=cmd_reconstruct)
    return parser


def _build(args, text):
    try:
        return build_group(parse_group_spec(text), cap=args.cap)
    except ValueError as ex:
        raise CliError(str(ex)) from None


def _emit(args, text_lines, machine_obj) -> None:
    if args.format == "machine":
        print(json.dumps(machine_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_table(args) -> int:
    G = _build(args, args.spec)
    table = char_table(G)
    cc = conjugacy_classes(G)
    rows = []
    for chi in table.irreducibles:
        rows.append({
            "degree": chi.degree,
            "kernel_order": kernel_of(table, chi).order,
            "codegree": codegree(table, chi),
            "values": [list(map(list, v)) for v in chi.values],
        })
    lines = [
        f"group {G.name}  order {G.order}  classes {cc.count}  "
        f"exponent {table.context.exponent}",
        f"field q={table.context.q} theta={table.context.theta} "
        f"(z = primitive {table.context.exponent}-th root of unity)",
        "class sizes: " + " ".join(map(str, cc.sizes)),
        "class reps:  " + " ".join(cycle_notation(G.elements[r]) for r in cc.reps),
    ]
    for i, (chi, row) in enumerate(zip(table.irreducibles, rows)):
        vals = " | ".join(render_pairs(v) for v in chi.values)
        lines.append(f"chi{i}: degree {row['degree']}  |ker| {row['kernel_order']}  "
                     f"cod {row['codegree']}  values: {vals}")
    _emit(args, lines, {
        "group": G.name, "order": G.order, "classes": list(cc.sizes),
        "exponent": table.context.exponent, "q": table.context.q,
        "theta": table.context.theta, "characters": rows,
    })
    return 0


def cmd_pseudo(args) -> int:
    G = _build(args, args.spec)
    P = pseudo_algebra(G)
    _emit(args, [str(P)],
          {"group": G.name, "order": G.order, "pseudo": str(P)})
    return 0


def cmd_compare(args) -> int:
    G1 = _build(args, args.spec1)
    G2 = _build(args, args.spec2)
    P1, P2 = pseudo_algebra(G1), pseudo_algebra(G2)
    verdict = "EQUAL" if P1 == P2 else "DIFFERENT"
    _emit(args, [verdict,
                 f"{args.spec1}: order {G1.order}  {P1}",
                 f"{args.spec2}: order {G2.order}  {P2}"],
          {"verdict": verdict,
           "first": {"spec": args.spec1, "order": G1.order, "pseudo": str(P1)},
           "second": {"spec": args.spec2, "order": G2.order, "pseudo": str(P2)}})
    return 0


def _parse_type(text):
    try:
        return parse_abelian_type(text)
    except ValueError as ex:
        raise CliError(str(ex)) from None


def _emit_report(args, report) -> int:
    _emit(args, [report.line()], report.as_dict())
    return 1 if report.verdict == FAIL else 0


def cmd_check_lemma21(args) -> int:
    return _emit_report(args, check_lemma21(_build(args, args.spec),
                                            _parse_type(args.type)))


def cmd_check_lemma22(args) -> int:
    return _emit_report(args, check_lemma22(_build(args, args.spec),
                                            _parse_type(args.type)))


def cmd_check_counterexample(args) -> int:
    return _emit_report(args, verify_counterexample(_build(args, args.spec),
                                                    _parse_type(args.type)))


def cmd_check_thm12(args) -> int:
    G = _build(args, args.spec)
    try:
        cert = thm12_certificate(G, args.p, args.n)
    except HypothesisNotMetError as ex:
        raise CliError(str(ex)) from None
    verdict = FAIL if cert.outcome == "violated" else "PASS"
    detail = f"outcome {cert.outcome}; " + "; ".join(f"{k}={v}" for k, v in cert.details)
    _emit(args, [f"CHECK thm12 {G.name} {verdict} — {detail}"],
          {"check": "thm12", "subject": G.name, "verdict": verdict,
           **cert.as_dict()})
    return 1 if verdict == FAIL else 0


def cmd_check_thm23(args) -> int:
    entries = load_catalog(args.catalog, cap=args.cap)
    pairs = [(e.name, e.build(args.cap)) for e in entries]
    return _emit_report(args, thm23_scan(pairs, args.p, args.n))


def cmd_search(args) -> int:
    target = pseudo_algebra(_build(args, args.against))
    entries = load_catalog(args.catalog, cap=args.cap)
    matches = []
    for entry in sorted(entries, key=lambda e: e.name):
        G = entry.build(args.cap)
        if pseudo_algebra(G) == target:
            matches.append((entry.name, G.order))
    lines = [f"{name} order {order}  {target}" for name, order in matches]
    lines.append(f"{len(matches)} match(es)")
    _emit(args, lines, {"target": str(target),
                        "matches": [{"name": n, "order": o} for n, o in matches]})
    return 0


def cmd_reconstruct(args) -> int:
    try:
        P = parse_pseudo(args.pairs)
    except ValueError as ex:
        raise CliError(str(ex)) from None
    try:
        t = reconstruct_abelian(P)
    except NotAbelianRealizableError as ex:
        _emit(args, [f"not abelian-realizable: {ex}"],
              {"pseudo": str(P), "realizable": False, "reason": str(ex)})
        return 0
    _emit(args, [str(t)],
          {"pseudo": str(P), "realizable": True, "type": str(t)})
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
