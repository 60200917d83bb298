from pathlib import Path
from typing import Optional

import typer

from rigid_jets.constants import ExitCode, ReportFormat
from rigid_jets.reports import emit_report
from rigid_jets.runner import run_suite


def suite(
    out: Optional[Path] = typer.Option(None, "--out", help="Write the aggregate report here instead of stdout."),
    fmt: ReportFormat = typer.Option(ReportFormat.JSON, "--format", help="Report format."),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1, help="Worker processes (default: the JOBS setting)."),
    timings: bool = typer.Option(False, "--timings", help="Record runtime_ms in each report."),
) -> None:
    """
    Runs the built-in suite (or the configured SUITE_RESOLVER) and writes the aggregate report.
    """
    report = run_suite(jobs=jobs, record_runtime=timings or None)
    try:
        emit_report(report, fmt, out)
    except OSError as exc:
        typer.echo(f"Error: cannot write {out}: {exc.strerror}", err=True)
        raise typer.Exit(ExitCode.USAGE)
    raise typer.Exit(ExitCode.OK if report.passed else ExitCode.FAILED)
