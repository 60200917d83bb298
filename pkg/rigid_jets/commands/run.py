from pathlib import Path
from typing import Optional

import typer

from rigid_jets.constants import ExitCode, ReportFormat
from rigid_jets.exceptions import JetError
from rigid_jets.reports import AggregateReport, emit_report
from rigid_jets.runner import run_scenario
from rigid_jets.scenarios import load_scenarios


def run(
    spec: Path = typer.Option(..., "--spec", help="Scenario json file: one object or a list of them."),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the report here instead of stdout."),
    fmt: ReportFormat = typer.Option(ReportFormat.JSON, "--format", help="Report format."),
    timings: bool = typer.Option(False, "--timings", help="Record runtime_ms in each report."),
) -> None:
    """
    Runs the scenarios in a spec file and writes their report.

    A file holding one scenario produces a single report; a list produces an aggregate.
    """
    try:
        specs = load_scenarios(spec)
    except JetError as exc:
        typer.echo(f"Error: {exc.message}", err=True)
        raise typer.Exit(ExitCode.USAGE)
    except OSError as exc:
        typer.echo(f"Error: cannot read {spec}: {exc.strerror}", err=True)
        raise typer.Exit(ExitCode.USAGE)

    reports = [run_scenario(s, record_runtime=timings or None) for s in specs]
    result = reports[0] if len(reports) == 1 else AggregateReport(reports)
    try:
        emit_report(result, fmt, out)
    except OSError as exc:
        typer.echo(f"Error: cannot write {out}: {exc.strerror}", err=True)
        raise typer.Exit(ExitCode.USAGE)
    raise typer.Exit(ExitCode.OK if result.passed else ExitCode.FAILED)
