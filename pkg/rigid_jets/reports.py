import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from rigid_jets.constants import CERTIFIES, ReportFormat, ScenarioKind
from rigid_jets.jetcore.serialization import canonical_dumps


@dataclass
class VerificationReport:
    """
    Outcome of one scenario.

    `passed` is true only when every assertion the scenario made held exactly; each
    failed assertion leaves a note behind.
    """

    scenario: str
    params: Dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    limit_jet: Optional[Dict[str, Any]] = None
    lowest_nontrivial_order: Optional[int] = None
    top_coefficient: Optional[str] = None
    kernel_dimension: Optional[int] = None
    notes: List[str] = field(default_factory=list)
    runtime_ms: int = 0

    def note(self, message: str) -> None:
        self.notes.append(message)

    def check(self, condition: bool, failure: str) -> bool:
        """
        Records an assertion. A false condition fails the report with `failure` as note.
        """
        if not condition:
            self.passed = False
            self.notes.append(f"FAILED: {failure}")
        return bool(condition)

    def fail(self, message: str) -> None:
        self.check(False, message)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "params": self.params,
            "pass": self.passed,
            "limit_jet": self.limit_jet,
            "lowest_nontrivial_order": self.lowest_nontrivial_order,
            "top_coefficient": self.top_coefficient,
            "kernel_dimension": self.kernel_dimension,
            "notes": list(self.notes),
            "runtime_ms": self.runtime_ms,
        }

    @classmethod
    def from_payload(cls, payload: Dict[str, Any]) -> "VerificationReport":
        return cls(
            scenario=payload["scenario"],
            params=dict(payload.get("params") or {}),
            passed=bool(payload["pass"]),
            limit_jet=payload.get("limit_jet"),
            lowest_nontrivial_order=payload.get("lowest_nontrivial_order"),
            top_coefficient=payload.get("top_coefficient"),
            kernel_dimension=payload.get("kernel_dimension"),
            notes=list(payload.get("notes") or []),
            runtime_ms=int(payload.get("runtime_ms", 0)),
        )


@dataclass
class AggregateReport:
    reports: List[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed(self) -> List[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    def to_payload(self) -> Dict[str, Any]:
        return {
            "pass": self.passed,
            "total": len(self.reports),
            "failed": len(self.failed),
            "reports": [r.to_payload() for r in self.reports],
        }

    @classmethod
    def from_payload(cls, payload: Dict[str, Any]) -> "AggregateReport":
        return cls([VerificationReport.from_payload(r) for r in payload.get("reports", [])])


Report = Union[VerificationReport, AggregateReport]


def _format_params(params: Dict[str, Any]) -> str:
    return ", ".join(f"{key}={params[key]}" for key in sorted(params) if key != "vector_fields")


def _render_text(report: VerificationReport) -> List[str]:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} {report.scenario} ({_format_params(report.params)})"]
    try:
        lines.append(f"  certifies: {CERTIFIES[ScenarioKind(report.scenario)]}")
    except ValueError:
        pass
    if report.lowest_nontrivial_order is not None:
        lines.append(f"  lowest nontrivial order: {report.lowest_nontrivial_order}")
    if report.top_coefficient is not None:
        lines.append(f"  top coefficient: {report.top_coefficient}")
    if report.kernel_dimension is not None:
        lines.append(f"  kernel dimension: {report.kernel_dimension}")
    lines.extend(f"  note: {note}" for note in report.notes)
    if report.runtime_ms:
        lines.append(f"  runtime: {report.runtime_ms} ms")
    return lines


def render_report(report: Report, fmt: ReportFormat = ReportFormat.JSON) -> str:
    if fmt is ReportFormat.JSON:
        return canonical_dumps(report.to_payload()) + "\n"
    if isinstance(report, VerificationReport):
        return "\n".join(_render_text(report)) + "\n"
    lines: List[str] = []
    for item in report.reports:
        lines.extend(_render_text(item))
    summary = "PASS" if report.passed else "FAIL"
    lines.append(f"{summary}: {len(report.reports) - len(report.failed)}/{len(report.reports)} scenarios passed")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: ReportFormat = ReportFormat.JSON, destination: Optional[Path] = None) -> None:
    """
    Writes the report to `destination`, or to stdout when no destination is given.

    Raises:
        OSError: If the destination cannot be written
    """
    text = render_report(report, fmt)
    if destination is None:
        sys.stdout.write(text)
        return
    Path(destination).write_text(text, encoding="utf-8")
