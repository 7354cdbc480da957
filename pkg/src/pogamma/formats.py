"""Structure files and report documents.

One JSON dialect serves both: every document carries a format tag, keys
appear in a fixed order, and serialization is byte-stable, so fixture
files round-trip exactly and machine reports can be diffed across runs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .enumeration import SweepReport, SweepViolation
from .model import (
    GammaTables,
    OrderRelation,
    PoGammaSemigroup,
    ValidationReport,
    format_failure,
    validate_structure,
)
from .theorems import CheckReport

STRUCTURE_FORMAT = "pogamma.structure/1"
REPORT_FORMAT = "pogamma.report/1"


class FormatError(ValueError):
    """The document cannot be parsed into a structure or report."""


class ValidationFailed(ValueError):
    """The document parsed but the structure breaks an axiom."""

    def __init__(self, message: str, report: ValidationReport):
        super().__init__(message)
        self.report = report


def structure_to_doc(s: PoGammaSemigroup, name: str | None = None) -> dict:
    doc = {"format": STRUCTURE_FORMAT}
    if name is not None:
        doc["name"] = name
    doc["n"] = s.n
    doc["m"] = s.m
    doc["tables"] = [[[int(v) for v in row] for row in table] for table in s.tables.op]
    doc["order"] = [[1 if v else 0 for v in row] for row in s.order.leq]
    return doc


def doc_to_structure(doc) -> tuple[PoGammaSemigroup, str | None]:
    if not isinstance(doc, dict):
        raise FormatError("structure document must be a JSON object")
    allowed = {"format", "name", "n", "m", "tables", "order"}
    for key in doc:
        if key not in allowed:
            raise FormatError(f"unknown key {key!r}")
    if doc.get("format") != STRUCTURE_FORMAT:
        raise FormatError(f"format tag must be {STRUCTURE_FORMAT!r}, got {doc.get('format')!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("name must be a string")
    n = doc.get("n")
    m = doc.get("m")
    if type(n) is not int or n < 1:
        raise FormatError("n must be a positive integer")
    if type(m) is not int or m < 1:
        raise FormatError("m must be a positive integer")
    tables = doc.get("tables")
    if not isinstance(tables, list) or len(tables) != m:
        raise FormatError(f"tables must be a list of {m} tables")
    for g, table in enumerate(tables):
        if not isinstance(table, list) or len(table) != n:
            raise FormatError(f"tables[{g}] must have {n} rows")
        for a, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise FormatError(f"tables[{g}][{a}] must have {n} entries")
            for b, v in enumerate(row):
                if type(v) is not int or not 0 <= v < n:
                    raise FormatError(
                        f"tables[{g}][{a}][{b}] must be an integer in 0..{n - 1}, got {v!r}")
    order = doc.get("order")
    if not isinstance(order, list) or len(order) != n:
        raise FormatError(f"order must be a {n}x{n} matrix")
    for a, row in enumerate(order):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"order[{a}] must have {n} entries")
        for b, v in enumerate(row):
            if type(v) is not int or v not in (0, 1):
                raise FormatError(f"order[{a}][{b}] must be 0 or 1, got {v!r}")
    s = PoGammaSemigroup(
        tables=GammaTables(n=n, m=m,
                           op=tuple(tuple(tuple(row) for row in table) for table in tables)),
        order=OrderRelation(n=n, leq=tuple(tuple(bool(v) for v in row) for row in order)))
    return s, name


def _dict_free(value) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(_dict_free(v) for v in value)
    return True


def _render(value, indent: int) -> str:
    # dicts and long lists break across lines; flat numeric lists stay inline
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_render(v, indent + 1)}' for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if _dict_free(value):
            flat = json.dumps(value, separators=(", ", ": "))
            if len(flat) <= 72:
                return flat
        if not value:
            return "[]"
        items = [f"{pad}  {_render(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def _dumps(doc: dict) -> str:
    return _render(doc, 0) + "\n"


def serialize_structure(s: PoGammaSemigroup, name: str | None = None) -> str:
    return _dumps(structure_to_doc(s, name))


def save_structure(path, s: PoGammaSemigroup, name: str | None = None) -> None:
    Path(path).write_text(serialize_structure(s, name), encoding="utf-8")


def load_named(path) -> tuple[PoGammaSemigroup, str | None]:
    """Parse a structure file, then check every axiom before returning."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: not valid JSON: {e}") from e
    try:
        s, name = doc_to_structure(doc)
    except FormatError as e:
        raise FormatError(f"{path}: {e}") from e
    report = validate_structure(s)
    if not report.ok:
        raise ValidationFailed(
            f"{path}: axiom failure {format_failure(report.failures[0])} "
            f"({len(report.failures)} failure(s) total)", report)
    return s, name


def load(path) -> PoGammaSemigroup:
    return load_named(path)[0]


def _check_payload(r: CheckReport) -> dict:
    return {"theorem": r.theorem_id, "status": r.status,
            "witness": r.witness, "detail": r.detail}


def _payload_check(payload) -> CheckReport:
    return CheckReport(theorem_id=payload["theorem"], status=payload["status"],
                       witness=payload["witness"], detail=payload["detail"])


def report_to_doc(r) -> dict:
    """Wrap a validation, check, check list, or sweep result as a document."""
    if isinstance(r, ValidationReport):
        kind = "validation"
        payload = {"ok": r.ok,
                   "failures": [[name, list(wit)] for name, wit in r.failures]}
    elif isinstance(r, CheckReport):
        kind = "check"
        payload = _check_payload(r)
    elif isinstance(r, list) and all(isinstance(x, CheckReport) for x in r):
        kind = "checks"
        payload = {"reports": [_check_payload(x) for x in r]}
    elif isinstance(r, SweepReport):
        kind = "sweep"
        payload = {
            "n": r.n, "m": r.m,
            "canonical": r.canonical,
            "require_order": r.require_order,
            "theorems": list(r.theorems),
            "structures": r.structures,
            "regular_structures": r.regular_structures,
            "completely_regular_structures": r.completely_regular_structures,
            "strongly_regular_structures": r.strongly_regular_structures,
            "product_property_structures": r.product_property_structures,
            "product_without_cr": r.product_without_cr,
            "product_without_cr_examples": [structure_to_doc(s) for s in r.product_without_cr_examples],
            "violations": [{"structure": structure_to_doc(v.structure),
                            "report": _check_payload(v.report)}
                           for v in r.violations],
        }
    else:
        raise TypeError(f"cannot serialize report of type {type(r).__name__}")
    return {"format": REPORT_FORMAT, "kind": kind, "payload": payload}


def doc_to_report(doc):
    """Inverse of report_to_doc."""
    if not isinstance(doc, dict) or doc.get("format") != REPORT_FORMAT:
        raise FormatError(f"report documents need format tag {REPORT_FORMAT!r}")
    kind = doc.get("kind")
    payload = doc.get("payload")
    if kind == "validation":
        return ValidationReport.from_failures(
            (name, tuple(wit)) for name, wit in payload["failures"])
    if kind == "check":
        return _payload_check(payload)
    if kind == "checks":
        return [_payload_check(p) for p in payload["reports"]]
    if kind == "sweep":
        return SweepReport(
            n=payload["n"], m=payload["m"],
            canonical=payload["canonical"],
            require_order=payload["require_order"],
            theorems=tuple(payload["theorems"]),
            structures=payload["structures"],
            regular_structures=payload["regular_structures"],
            completely_regular_structures=payload["completely_regular_structures"],
            strongly_regular_structures=payload["strongly_regular_structures"],
            product_property_structures=payload["product_property_structures"],
            product_without_cr=payload["product_without_cr"],
            product_without_cr_examples=[doc_to_structure(d)[0]
                                         for d in payload["product_without_cr_examples"]],
            violations=[SweepViolation(structure=doc_to_structure(v["structure"])[0],
                                       report=_payload_check(v["report"]))
                        for v in payload["violations"]],
        )
    raise FormatError(f"unknown report kind {kind!r}")


def serialize_report(r) -> str:
    return _dumps(report_to_doc(r))
