import logging
from fractions import Fraction
from typing import Any, Dict, Sequence

from rigid_jets.charts.jets import (
    centered_chart_jets,
    conjugated_family,
    torus_closed_form,
    verify_torus_closed_form,
    volume_closed_form,
)
from rigid_jets.charts.specs import DegenerationScenario, TorusChartSpec
from rigid_jets.constants import ChartKind, ScenarioKind
from rigid_jets.exceptions import PoleAtZero
from rigid_jets.jetcore.limits import scalar_limit_at_zero
from rigid_jets.jetcore.maps import TruncatedPolyMap, jet_truncate
from rigid_jets.jetcore.serialization import serialize_map
from rigid_jets.jetcore.series import binomial_coefficients
from rigid_jets.reports import VerificationReport
from rigid_jets.utils import format_rational

logger = logging.getLogger(__name__)

_SCENARIO_KINDS = {
    ChartKind.TORUS: ScenarioKind.TORUS_DEGENERATION,
    ChartKind.VOLUME: ScenarioKind.VOLUME_DEGENERATION,
    ChartKind.LIE: ScenarioKind.LIE_DEGENERATION,
}

# Generic x-coordinates for the base-point independence check
GENERIC_BASE_X = (Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7), Fraction(5, 11), Fraction(-7, 13))


def derived_top_coefficient(chart: ChartKind, n: int, k: int) -> Fraction:
    """
    Coefficient of eta^k in the first x-component of the limit jet, from the series
    expansion: (-1)^(k-1) for torus and Lie charts, -r_k for the volume chart.
    """
    if chart is ChartKind.VOLUME:
        return -binomial_coefficients(Fraction(1, n), k + 1)[k]
    return Fraction((-1) ** (k - 1))


def printed_top_coefficient(chart: ChartKind, n: int, k: int) -> Fraction:
    if chart is ChartKind.VOLUME:
        return binomial_coefficients(Fraction(1, n), k + 1)[k]
    return Fraction((-1) ** k)


def top_coefficient(limit: TruncatedPolyMap, component: int, k: int) -> Fraction:
    exps = tuple(k if i == limit.source_dim - 1 else 0 for i in range(limit.source_dim))
    return limit[component].coefficient(exps)


def record_limit_profile(
    report: VerificationReport,
    limit: TruncatedPolyMap,
    chart: ChartKind,
    n: int,
    k: int,
    component: int = 0,
) -> None:
    """
    Fills the limit jet, its lowest nontrivial order and the eta^k coefficient of
    `component` into the report and checks the degeneration profile: trivial through
    order k-1, nontrivial at order k, top coefficient as derived from the series.
    """
    report.limit_jet = serialize_map(limit)
    report.lowest_nontrivial_order = limit.lowest_nontrivial_order()
    coefficient = top_coefficient(limit, component, k)
    report.top_coefficient = format_rational(coefficient)

    report.check(jet_truncate(limit, k - 1).is_identity(), f"limit jet is not the identity at order {k - 1}")
    report.check(report.lowest_nontrivial_order == k, f"lowest nontrivial order is {report.lowest_nontrivial_order}, expected {k}")
    derived = derived_top_coefficient(chart, n, k)
    report.check(coefficient == derived, f"top coefficient {coefficient} differs from the series value {derived}")

    printed = printed_top_coefficient(chart, n, k)
    if coefficient != printed and abs(coefficient) == abs(printed):
        report.note(
            f"sign: derived coefficient {format_rational(coefficient)} of eta^{k} differs from the "
            f"printed value {format_rational(printed)}; only nontriviality at order {k} is used"
        )
        logger.warning(f"Sign discrepancy for {chart.value} chart, n={n}, k={k}")


def _limit(spec, b_exponent: int, base_x: Sequence[Fraction]) -> TruncatedPolyMap:
    jets = centered_chart_jets(spec, list(base_x) + [None])
    nu = conjugated_family(spec, spec.field.gen ** b_exponent, jets=jets)
    return scalar_limit_at_zero(nu)


def degenerate_family(scenario: DegenerationScenario) -> VerificationReport:
    """
    Substitutes b = y^k (b = s^(n k) on the volume chart) into nu(b, p), sends the
    limit parameter to 0 and reports the limit jet.

    A pole at the limit fails the report instead of raising.
    """
    if scenario.chart is ChartKind.LIE:
        from rigid_jets.liecalc.degeneration import lie_degeneration_from_scenario
        return lie_degeneration_from_scenario(scenario)

    spec = scenario.chart_spec()
    n, k = scenario.n, scenario.k
    report = VerificationReport(
        scenario=_SCENARIO_KINDS[scenario.chart].value,
        params=scenario_params(scenario),
    )
    logger.info(f"Degenerating the {scenario.chart.value} family for n={n}, k={k}")

    jets = centered_chart_jets(spec, list(scenario.base_x) + [None])
    b = spec.field.gen ** scenario.substitution_exponent
    nu = conjugated_family(spec, b, jets=jets)
    closed_form = torus_closed_form(spec, b) if isinstance(spec, TorusChartSpec) else volume_closed_form(spec, b)
    report.check(nu == closed_form, "conjugated family differs from its closed form after substituting b")
    report.check(conjugated_family(spec, 0, jets=jets).is_identity(), "b = 0 does not give the identity family")
    if isinstance(spec, TorusChartSpec):
        report.check(verify_torus_closed_form(spec, scenario.base_x), "closed form fails for symbolic b")
    else:
        r_k = binomial_coefficients(spec.delta, k + 1)[k]
        report.check(r_k != 0, f"r_{k} vanishes for delta = {spec.delta}")
        report.note(f"r_{k} = {format_rational(r_k)} for delta = {format_rational(spec.delta)}")

    try:
        limit = scalar_limit_at_zero(nu)
    except PoleAtZero as exc:
        report.fail(f"limit does not exist: {exc.message}")
        return report
    record_limit_profile(report, limit, scenario.chart, n, k)

    other_x = _other_base_x(scenario.base_x)
    report.check(
        _limit(spec, scenario.substitution_exponent, other_x) == limit,
        f"limit jet depends on the base-point x-coordinates (compared with {[format_rational(x) for x in other_x]})",
    )
    return report


def _other_base_x(base_x: Sequence[Fraction]) -> Sequence[Fraction]:
    if any(base_x):
        return tuple(Fraction(0) for _ in base_x)
    return GENERIC_BASE_X[: len(base_x)]


def scenario_params(scenario: DegenerationScenario) -> Dict[str, Any]:
    return {"n": scenario.n, "k": scenario.k, "base_x": [format_rational(x) for x in scenario.base_x]}
