"""Verification results, reports, and their serialized forms."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional

from .residue import Residue

STATUSES = ("pass", "fail", "skipped", "error")
FORMATS = ("text", "json", "csv")
REPORT_VERSION = 1


@dataclass(frozen=True)
class VerificationResult:
    congruence_id: str
    p: int
    status: str
    lhs: Optional[Residue] = None
    rhs: Optional[Residue] = None
    message: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "pass" and self.lhs != self.rhs:
            raise ValueError("pass requires equal residues")
        if self.status == "fail" and (self.lhs is None or self.rhs is None or self.lhs == self.rhs):
            raise ValueError("fail requires two differing residues")


@dataclass(frozen=True)
class VerificationReport:
    lo: int
    hi: int
    results: tuple[VerificationResult, ...]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def summary(self) -> dict[str, int]:
        counts = dict.fromkeys(STATUSES, 0)
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0


def _decimal(r: Optional[Residue]) -> Optional[str]:
    return None if r is None else str(r.value)


def _json(report: VerificationReport) -> str:
    rows = []
    for r in report.results:
        row = {"id": r.congruence_id, "p": r.p, "status": r.status, "lhs": _decimal(r.lhs), "rhs": _decimal(r.rhs)}
        if r.message:
            row["message"] = r.message
        rows.append(row)
    doc = {
        "version": REPORT_VERSION,
        "range": {"lo": report.lo, "hi": report.hi},
        "results": rows,
        "summary": report.summary,
    }
    return json.dumps(doc, indent=2) + "\n"


def _csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "p", "status", "lhs", "rhs"])
    for r in report.results:
        writer.writerow([r.congruence_id, r.p, r.status, _decimal(r.lhs) or "", _decimal(r.rhs) or ""])
    return buf.getvalue()


def _text(report: VerificationReport) -> str:
    per_id: dict[str, dict[str, int]] = {}
    problems = []
    for r in report.results:
        per_id.setdefault(r.congruence_id, dict.fromkeys(STATUSES, 0))[r.status] += 1
        if r.status in ("fail", "error"):
            problems.append(r)
    lines = [f"primes {report.lo}..{report.hi}"]
    if per_id:
        width = max(len(i) for i in per_id)
        lines.append(f"{'id':<{width}}  " + "  ".join(f"{s:>7}" for s in STATUSES))
        for ident, counts in per_id.items():
            lines.append(f"{ident:<{width}}  " + "  ".join(f"{counts[s]:>7}" for s in STATUSES))
    for r in problems:
        detail = f"lhs={_decimal(r.lhs)} rhs={_decimal(r.rhs)}" if r.status == "fail" else ""
        extra = f" {r.message}" if r.message else ""
        lines.append(f"{r.status.upper()} {r.congruence_id} p={r.p} {detail}{extra}".rstrip())
    s = report.summary
    lines.append("summary: " + " ".join(f"{k}={s[k]}" for k in STATUSES))
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "text") -> bytes:
    """Serialize deterministically; elapsed time is never part of the output."""
    if fmt == "json":
        return _json(report).encode("utf-8")
    if fmt == "csv":
        return _csv(report).encode("utf-8")
    if fmt == "text":
        return _text(report).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")
