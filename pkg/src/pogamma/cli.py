"""Command line surface: validate, analyze, check, and sweep.

Exit codes are part of the contract: 0 means every requested check
passed, 1 means some claim was violated, 2 means the input could not be
checked at all (unreadable, unparseable, axiom-breaking, or bad usage).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats, setcalc, theorems
from .enumeration import EnumSpec, sweep
from .formats import FormatError, ValidationFailed
from .theorems import THEOREM_IDS, CheckReport


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fmt_set(members) -> str:
    return "{" + ", ".join(str(x) for x in sorted(members)) + "}"


def _fmt_witness(w) -> str:
    return "none" if w is None else "(" + ", ".join(str(v) for v in w.data) + ")"


def cmd_validate(args) -> int:
    try:
        s, name = formats.load_named(args.path)
    except ValidationFailed as e:
        print(f"error: {e}", file=sys.stderr)
        if args.format == "machine":
            _emit(formats.serialize_report(e.report), args.out)
        return 2
    except (FormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.format == "machine":
        _emit(formats.serialize_report(formats.validate_structure(s)), args.out)
    else:
        label = f"{name} " if name else ""
        _emit(f"ok: {label}(n={s.n}, m={s.m}) satisfies all axioms\n", args.out)
    return 0


def _analysis_payload(s, name) -> dict:
    elements = []
    for a in range(s.n):
        row = {"element": a}
        for key, kind in (("regular", "regular"),
                          ("left_regular", "left-regular"),
                          ("right_regular", "right-regular"),
                          ("completely_regular", "completely-regular"),
                          ("strongly_regular", "strongly-regular")):
            w = setcalc.regularity(s, a, kind)
            row[key] = None if w is None else list(w.data)
        elements.append(row)
    bi_ideals = [{"members": sorted(b), "semiprime": setcalc.is_semiprime(s, b)}
                 for b in setcalc.all_bi_ideals(s)]
    generated = [{"element": a,
                  "bi_ideal": sorted(setcalc.bi_ideal_generated_formula(s, {a}))}
                 for a in range(s.n)]
    payload = {}
    if name is not None:
        payload["name"] = name
    payload.update({
        "n": s.n, "m": s.m,
        "completely_regular": setcalc.is_completely_regular(s) is None,
        "strongly_regular": setcalc.is_strongly_regular(s) is None,
        "elements": elements,
        "bi_ideals": bi_ideals,
        "generated": generated,
    })
    return payload


def _analysis_text(payload) -> str:
    lines = []
    label = f"{payload['name']} " if "name" in payload else ""
    lines.append(f"structure: {label}(n={payload['n']}, m={payload['m']})")
    lines.append(f"completely regular: {'yes' if payload['completely_regular'] else 'no'}")
    lines.append(f"strongly regular: {'yes' if payload['strongly_regular'] else 'no'}")
    lines.append("elements:")
    for row in payload["elements"]:
        parts = []
        for key in ("regular", "left_regular", "right_regular",
                    "completely_regular", "strongly_regular"):
            w = row[key]
            shown = "none" if w is None else "(" + ", ".join(str(v) for v in w) + ")"
            parts.append(f"{key.replace('_', '-')}={shown}")
        lines.append(f"  {row['element']}: " + " ".join(parts))
    lines.append("bi-ideals:")
    for entry in payload["bi_ideals"]:
        flag = "yes" if entry["semiprime"] else "no"
        lines.append(f"  {_fmt_set(entry['members'])}: semiprime={flag}")
    lines.append("generated:")
    for entry in payload["generated"]:
        lines.append(f"  B({entry['element']}) = {_fmt_set(entry['bi_ideal'])}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    try:
        s, name = formats.load_named(args.path)
    except (ValidationFailed, FormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    payload = _analysis_payload(s, name)
    if args.format == "machine":
        doc = {"format": formats.REPORT_FORMAT, "kind": "analysis", "payload": payload}
        _emit(formats._dumps(doc), args.out)
    else:
        _emit(_analysis_text(payload), args.out)
    return 0


def _check_text(reports) -> str:
    lines = []
    for r in reports:
        if r.status == "pass":
            lines.append(f"{r.theorem_id}: pass")
        else:
            lines.append(f"{r.theorem_id}: VIOLATION {r.witness} ({r.detail})")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    try:
        s, _ = formats.load_named(args.path)
    except (ValidationFailed, FormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    reports = theorems.run_selected(s, ids)
    if args.force_violation:
        reports = reports + [CheckReport(
            theorem_id="forced-violation", status="violation",
            witness={"forced": True},
            detail="synthetic violation requested with --force-violation")]
    if args.format == "machine":
        _emit(formats.serialize_report(reports), args.out)
    else:
        _emit(_check_text(reports), args.out)
    return 1 if any(r.status == "violation" for r in reports) else 0


def _sweep_text(report) -> str:
    lines = [
        f"sweep n={report.n} m={report.m} canonical={'yes' if report.canonical else 'no'}",
        f"structures: {report.structures}",
        f"regular: {report.regular_structures}",
        f"completely regular: {report.completely_regular_structures}",
        f"strongly regular: {report.strongly_regular_structures}",
        f"product property: {report.product_property_structures}",
        f"product property without complete regularity: {report.product_without_cr}",
        f"violations: {len(report.violations)}",
    ]
    for v in report.violations:
        lines.append(f"  {v.report.theorem_id}: {v.report.witness} ({v.report.detail})")
        lines.append(f"    structure: {formats.structure_to_doc(v.structure)}")
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return 2
    spec = EnumSpec(n=args.n, m=args.m, canonical_only=args.canonical)
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    try:
        report = sweep(spec, theorem_ids=ids, workers=args.workers)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.format == "machine":
        _emit(formats.serialize_report(report), args.out)
    else:
        _emit(_sweep_text(report), args.out)
    return 1 if report.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pogamma",
        description="Workbench for finite ordered Gamma-semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "machine"), default="text",
                       help="text for humans, machine for stable JSON")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write the report here instead of stdout")

    p = sub.add_parser("validate", help="check every axiom of a structure file")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="witnesses, bi-ideals, and flags for one structure")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="run claim checkers against a structure file")
    p.add_argument("path")
    p.add_argument("--theorem", choices=THEOREM_IDS + ("all",), default="all")
    p.add_argument("--force-violation", action="store_true",
                   help="testing aid: append a synthetic violation to exercise exit code 1")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="enumerate structures and check claims on each")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theorem", choices=THEOREM_IDS + ("all",), default="all")
    p.add_argument("--canonical", action="store_true",
                   help="keep one representative per isomorphism class")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
