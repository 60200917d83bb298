"""
Runs scenarios and collects their reports.

Each scenario kind has one registered handler that turns a validated `ScenarioSpec`
into a `VerificationReport`. Mathematical failures become failing reports; programming
and input errors propagate.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence

from rigid_jets.charts.degeneration import degenerate_family
from rigid_jets.charts.oracle import oracle_crosscheck
from rigid_jets.charts.specs import DegenerationScenario
from rigid_jets.constants import ChartKind, OracleTarget, ScenarioKind
from rigid_jets.exceptions import MathematicalFailure
from rigid_jets.reports import AggregateReport, VerificationReport
from rigid_jets.resolvers import get_settings
from rigid_jets.rigidity.framing import verify_framing
from rigid_jets.rigidity.genconn import verify_generalized_connection, verify_gl_stabilizer
from rigid_jets.scenarios import ScenarioSpec, build_framing
from rigid_jets.utils import parse_rational

logger = logging.getLogger(__name__)

Handler = Callable[[ScenarioSpec], VerificationReport]

HANDLERS: Dict[ScenarioKind, Handler] = {}


def register(kind: ScenarioKind) -> Callable[[Handler], Handler]:
    def decorator(handler: Handler) -> Handler:
        HANDLERS[kind] = handler
        return handler

    return decorator


@register(ScenarioKind.TORUS_DEGENERATION)
def _torus(spec: ScenarioSpec) -> VerificationReport:
    p = spec.params
    return degenerate_family(DegenerationScenario(ChartKind.TORUS, p["n"], p["k"], tuple(p["base_x"])))


@register(ScenarioKind.VOLUME_DEGENERATION)
def _volume(spec: ScenarioSpec) -> VerificationReport:
    p = spec.params
    return degenerate_family(DegenerationScenario(ChartKind.VOLUME, p["n"], p["k"], tuple(p["base_x"])))


@register(ScenarioKind.LIE_DEGENERATION)
def _lie(spec: ScenarioSpec) -> VerificationReport:
    p = spec.params
    n = p["big"] ** 2 - 1
    scenario = DegenerationScenario(ChartKind.LIE, n, p["k"], tuple(p["base_x"]), small=p["small"], big=p["big"])
    return degenerate_family(scenario)


@register(ScenarioKind.FRAMING_KERNEL)
def _framing(spec: ScenarioSpec) -> VerificationReport:
    p = spec.params
    return verify_framing(
        build_framing(p),
        p["point"],
        p["l"],
        candidates=p.get("candidates"),
        expected_survivors=spec.expect.get("surviving_candidates"),
    )


@register(ScenarioKind.GENCONN_RIGIDITY)
def _genconn(spec: ScenarioSpec) -> VerificationReport:
    return verify_generalized_connection(spec.params["n"])


@register(ScenarioKind.GL_STABILIZER)
def _gl_stabilizer(spec: ScenarioSpec) -> VerificationReport:
    return verify_gl_stabilizer(spec.params["n"])


@register(ScenarioKind.ORACLE_CROSSCHECK)
def _oracle(spec: ScenarioSpec) -> VerificationReport:
    p = spec.params
    return oracle_crosscheck(
        OracleTarget(p["target"]),
        p["n"],
        p["k"],
        points=p.get("points"),
        seed=spec.seed,
        b=parse_rational(p.get("b", "1")),
    )


def _check_expectations(report: VerificationReport, spec: ScenarioSpec) -> None:
    # surviving_candidates is checked inside the framing report
    expect = spec.expect
    if "lowest_nontrivial_order" in expect:
        report.check(
            report.lowest_nontrivial_order == expect["lowest_nontrivial_order"],
            f"lowest nontrivial order {report.lowest_nontrivial_order}, expected {expect['lowest_nontrivial_order']}",
        )
    if "top_coefficient" in expect:
        report.check(
            report.top_coefficient == expect["top_coefficient"],
            f"top coefficient {report.top_coefficient}, expected {expect['top_coefficient']}",
        )
    if "kernel_dimension" in expect:
        report.check(
            report.kernel_dimension == expect["kernel_dimension"],
            f"kernel dimension {report.kernel_dimension}, expected {expect['kernel_dimension']}",
        )


def run_scenario(spec: ScenarioSpec, record_runtime: Optional[bool] = None) -> VerificationReport:
    """
    Runs one scenario.

    A `MathematicalFailure` raised by the computation is caught and reported as
    pass = false with the failure in the notes. `record_runtime` overrides the
    RECORD_RUNTIME setting.
    """
    if record_runtime is None:
        record_runtime = get_settings().RECORD_RUNTIME
    started = time.perf_counter()
    try:
        report = HANDLERS[spec.kind](spec)
    except MathematicalFailure as exc:
        logger.warning(f"Scenario {spec.kind.value} failed: {exc.message}")
        report = VerificationReport(scenario=spec.kind.value, params=dict(spec.params))
        report.fail(f"{type(exc).__name__}: {exc.message}")
    _check_expectations(report, spec)
    if record_runtime:
        report.runtime_ms = int((time.perf_counter() - started) * 1000)
    logger.info(f"Scenario {spec.kind.value} {'passed' if report.passed else 'failed'}")
    return report


def run_suite(
    specs: Optional[Sequence[ScenarioSpec]] = None,
    jobs: Optional[int] = None,
    record_runtime: Optional[bool] = None,
) -> AggregateReport:
    """
    Runs `specs` (default: the SUITE_RESOLVER suite) and aggregates the reports in
    input order. With more than one job the scenarios run in worker processes.
    """
    settings = get_settings()
    specs = list(specs) if specs is not None else settings.SUITE_RESOLVER()
    jobs = jobs if jobs is not None else settings.JOBS
    logger.info(f"Running {len(specs)} scenarios with {jobs} job(s)")
    reports: List[VerificationReport]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(partial(run_scenario, record_runtime=record_runtime), specs))
    else:
        reports = [run_scenario(spec, record_runtime) for spec in specs]
    return AggregateReport(reports)
