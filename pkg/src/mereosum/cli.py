"""Command line interface.

Exit status: 0 when every requested check holds, 1 when some axiom or
profile check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .documents import dump_model, load_model, structure_to_dict
from .dot import export_dot
from .enumeration import EnumerationLimitError, enumerate_mereo, enumerate_sum
from .equivalence import induce_part, induce_sum, roundtrip_part, roundtrip_sum
from .fixtures import FIXTURE_NAMES, check_profile, witness
from .model import MereoStructure, ModelError, SumStructure
from .parthood import PART_AXIOMS, check_part_axioms
from .report import AxiomReport, format_witness, report_to_dict
from .sums import SUM_AXIOMS, check_sum_axioms, derived_theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _theory_of(s) -> str:
    return "part" if isinstance(s, MereoStructure) else "sum"


def _as_theory(s, theory: str):
    if theory == _theory_of(s):
        return s
    return induce_sum(s) if theory == "sum" else induce_part(s)


def _emit(args, text: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    s = load_model(args.file)
    s = _as_theory(s, args.theory or _theory_of(s))
    which = args.axioms.split(",") if args.axioms else None
    if isinstance(s, SumStructure):
        report = check_sum_axioms(s, which, strict_s1=args.strict_s1_in_x)
        if args.theorems:
            report = AxiomReport(report.verdicts + derived_theorem_suite(s).verdicts)
    else:
        if args.theorems:
            raise ModelError("--theorems applies to --theory=sum")
        report = check_part_axioms(s, which)
    data = {"theory": _theory_of(s), "elements": list(s.domain.labels)}
    data.update(report_to_dict(report, s.domain))
    text = "\n".join(v.describe(s.domain) for v in report)
    _emit(args, text, data)
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_induce(args) -> int:
    s = _as_theory(load_model(args.file), args.to)
    if args.format == "json":
        print(json.dumps(structure_to_dict(s), ensure_ascii=False, indent=2))
    else:
        sys.stdout.write(dump_model(s))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    s = load_model(args.file)
    rep = roundtrip_part(s) if isinstance(s, MereoStructure) else roundtrip_sum(s)
    dom = s.domain
    diff = None
    if rep.difference is not None:
        a, b = rep.difference
        diff = (
            {"x": dom.labels[a], "y": dom.labels[b]}
            if rep.direction == "part-first"
            else {"x": dom.labels[a], "X": dom.names(b)}
        )
    status = "identity" if rep.equal else "differs"
    text = f"{rep.direction}: {status}"
    if rep.difference is not None:
        a, b = rep.difference
        role = {"y": b} if rep.direction == "part-first" else {"X": b}
        text += f" at {format_witness({'x': a, **role}, dom)}"
    if not rep.in_theory:
        text += " (input is not a model of its theory)"
    _emit(
        args,
        text,
        {"direction": rep.direction, "equal": rep.equal, "difference": diff,
         "in_theory": rep.in_theory},
    )
    return EXIT_OK if rep.equal else EXIT_FAIL


def cmd_enumerate(args) -> int:
    run = enumerate_mereo if args.theory == "part" else enumerate_sum
    result = run(
        args.n,
        collect=not args.count_only,
        up_to_iso=args.up_to_iso,
        workers=args.workers,
        prune=not args.no_prune,
    )
    if args.count_only and args.format == "text":
        print(result.iso_count if args.up_to_iso else result.labeled_count)
        return EXIT_OK
    models = [] if result.models is None else result.structures()
    data = {
        "n": result.n,
        "theory": args.theory,
        "labeled_count": result.labeled_count,
        "up_to_iso": result.iso_count,
        "via_bijection": result.via_bijection,
        "elapsed": round(result.elapsed, 3),
        "models": [structure_to_dict(m) for m in models],
    }
    lines = [f"n={result.n} theory={args.theory} labeled={result.labeled_count}"]
    if result.iso_count is not None:
        lines[0] += f" up_to_iso={result.iso_count}"
    if result.via_bijection:
        lines[0] += " (via parthood models)"
    for m in models:
        lines.append(json.dumps(structure_to_dict(m)["pairs"], ensure_ascii=False))
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_witnesses(args) -> int:
    all_ok = True
    rows = []
    lines = []
    for name in FIXTURE_NAMES:
        fx = witness(name)
        matched, observed = check_profile(fx)
        all_ok &= matched
        failing = [a for a, h in observed.items() if not h]
        report = check_sum_axioms(fx.structure, fx.expected)
        rows.append(
            {"name": name, "matched": matched, "expected": fx.expected,
             "observed": observed,
             **report_to_dict(report, fx.structure.domain)}
        )
        status = "profile matched" if matched else "PROFILE MISMATCH"
        lines.append(f"{name}: {status}; failing: {', '.join(failing) or 'none'}")
        if not matched:
            for v in report.failures():
                lines.append(f"  {v.describe(fx.structure.domain)}")
        if args.write:
            os.makedirs(args.write, exist_ok=True)
            with open(os.path.join(args.write, f"{name}.model"), "w", encoding="utf-8") as fh:
                fh.write(dump_model(fx.structure, name=name, note=fx.caption))
    _emit(args, "\n".join(lines), {"all_matched": all_ok, "fixtures": rows})
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    text = export_dot(load_model(args.file))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mereosum",
        description="Check, convert and enumerate finite parthood and sum structures.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="decide axioms on a model document")
    p.add_argument("file")
    p.add_argument("--theory", choices=("part", "sum"),
                   help="theory to check; a document of the other kind is converted first")
    p.add_argument("--axioms", help="comma separated subset of: "
                   + ", ".join(PART_AXIOMS + SUM_AXIOMS))
    p.add_argument("--theorems", action="store_true",
                   help="also run the derived theorem suite (sum theory)")
    p.add_argument("--strict-s1-in-x", action="store_true",
                   help="require the sum demanded by S1 to be a member of the collection")
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("induce", help="convert a document to the other theory")
    p.add_argument("file")
    p.add_argument("--to", choices=("part", "sum"), required=True)
    add_format(p)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("roundtrip", help="translate to the other theory and back")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("enumerate", help="list every model on a labelled domain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("part", "sum"), default="part")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--up-to-iso", action="store_true",
                   help="also count models up to relabelling (printed alone with --count-only)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-prune", action="store_true",
                   help="disable search pruning (slow; for cross-checking)")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witnesses", help="check the independence fixtures")
    p.add_argument("--write", metavar="DIR", help="also write each fixture as a document")
    add_format(p)
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("export-dot", help="write a Graphviz diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModelError, EnumerationLimitError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"mereosum: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
