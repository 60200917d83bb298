"""
Degeneration of the adjoint shear on the blown-up homogeneous space.

Coordinates on the chart are ordered as: the subalgebra offsets alpha (passed through
unchanged), then x1 on [V, Y], the other complement directions, and y on Y last. The
chart (v, x, y) -> (v, x y, y) is the torus chart on the complement block.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ

from rigid_jets.charts.degeneration import record_limit_profile
from rigid_jets.charts.jets import conjugate_through_chart, torus_closed_form
from rigid_jets.charts.specs import DegenerationScenario, TorusChartSpec
from rigid_jets.constants import ChartKind, Matrix, ScenarioKind
from rigid_jets.exceptions import (
    DimensionMismatch,
    DirectionConditionFailed,
    InvalidModel,
    OrderMismatch,
    PoleAtZero,
)
from rigid_jets.jetcore.limits import scalar_limit_at_zero
from rigid_jets.jetcore.maps import CenteredJet, TruncatedPolyMap, jet_invert
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import RationalFunctionField
from rigid_jets.liecalc.adjoint import (
    ad_exp,
    check_complement_preserved,
    check_group_law,
    check_killing_invariance,
    check_unimodular,
    exp_series,
    nilpotency_degree,
    permuted,
)
from rigid_jets.liecalc.algebra import LieAlgebraModel, bracket, build_sl_embedding, is_simple_root, is_zero
from rigid_jets.reports import VerificationReport
from rigid_jets.utils import format_rational, offset_names, parse_rational

logger = logging.getLogger(__name__)

LIMIT_PARAM = "y"


@dataclass(frozen=True)
class ShearDirections:
    """
    The shear direction V in the subalgebra, the blown-up direction Y in the complement
    and their bracket. Indices point into the model basis.
    """

    V: Matrix
    Y: Matrix
    VY: Matrix
    v_index: int
    y_index: int
    x1_index: int


def select_shear_directions(model: LieAlgebraModel) -> ShearDirections:
    """
    First pair (V, Y) in basis order with V a simple-root vector of the subalgebra, Y a
    simple-root vector outside it, [V, Y] != 0 and [V, Y] outside the subalgebra.

    Raises:
        DirectionConditionFailed: If no such pair exists or ad_V is not nilpotent
    """
    for v_index in model.subalgebra:
        if not is_simple_root(model.roots[v_index]):
            continue
        V = model.basis[v_index]
        try:
            nilpotency_degree(model.ad_matrix(V))
        except InvalidModel as exc:
            raise DirectionConditionFailed(exc.message) from exc
        for y_index in model.complement:
            if not is_simple_root(model.roots[y_index]):
                continue
            VY = bracket(V, model.basis[y_index])
            if is_zero(VY) or model.in_subalgebra(VY):
                continue
            coords = model.coordinates(VY)
            support = [i for i, c in enumerate(coords) if c]
            if len(support) != 1:
                continue
            logger.debug(f"Shear directions V={model.labels[v_index]}, Y={model.labels[y_index]}")
            return ShearDirections(V, model.basis[y_index], VY, v_index, y_index, support[0])
    raise DirectionConditionFailed(
        f"No simple-root pair (V, Y) with [V, Y] outside sl_{model.small} in sl_{model.size}"
    )


def chart_order(model: LieAlgebraModel, directions: ShearDirections, include_subalgebra: bool = True) -> List[int]:
    rest = [i for i in model.complement if i not in (directions.x1_index, directions.y_index)]
    head = list(model.subalgebra) if include_subalgebra else []
    return head + [directions.x1_index] + rest + [directions.y_index]


def lie_chart_jet(
    nv: int,
    base_x: Sequence[Fraction],
    order: int,
    field: RationalFunctionField,
) -> CenteredJet:
    """
    Centered jet of (v, x, y) -> (v, x y, y) at (0, base_x, y) with y symbolic.
    """
    nx = len(base_x)
    variables = tuple(offset_names("alpha", nv)) + tuple(offset_names("xi", nx)) + ("eta",)
    y = field.gen
    eta = TruncatedPoly.variable(nv + nx, variables, order, field)
    components = [TruncatedPoly.variable(i, variables, order, field) for i in range(nv)]
    for i, x in enumerate(base_x):
        xi = TruncatedPoly.variable(nv + i, variables, order, field)
        components.append(xi.scale(y) + eta.scale(x) + xi * eta)
    components.append(eta)
    point = tuple(field.zero for _ in range(nv)) + tuple(field.convert(x) for x in base_x) + (y,)
    return CenteredJet(point, TruncatedPolyMap(components))


def _row_image(row: Sequence[Any], offsets: TruncatedPolyMap) -> TruncatedPoly:
    field = offsets.field
    acc = TruncatedPoly.zero(offsets.variables, offsets.order, field)
    for coefficient, component in zip(row, offsets):
        if coefficient:
            acc = acc + component.scale(coefficient)
    return acc


def _subalgebra_linear_terms(ad: Matrix, nv: int, variables: Sequence[str]) -> Tuple[bool, List[str]]:
    # each q_i is linear in alpha at first order in b: at most one alpha_j with a rational factor
    ok = True
    described = []
    for i in range(nv):
        support = [j for j, c in enumerate(ad[i]) if c]
        if len(support) > 1 or any(j >= nv for j in support):
            ok = False
        if support:
            j = support[0]
            described.append(f"q{i + 1} = {format_rational(ad[i][j])} b {variables[j]}")
        else:
            described.append(f"q{i + 1} = 0")
    return ok, described


def _trivial_linear_rows(model: LieAlgebraModel, V: Matrix, order: List[int]) -> Tuple[int, int]:
    """
    Counts rows whose linear-in-b term vanishes and, of those, the rows whose whole
    polynomial in b vanishes as well.
    """
    ring = QQ.poly_ring(Symbol("b"))
    ad = model.ad_matrix(V)
    exp_rows = exp_series(ad, ring.gens[0], ring).to_list()
    linear_zero = 0
    fully_zero = 0
    for r in order:
        if any(ad[r][c] for c in order):
            continue
        linear_zero += 1
        if all(exp_rows[r][c] == (ring.one if r == c else ring.zero) for c in order):
            fully_zero += 1
    return linear_zero, fully_zero


def _conjugated(
    model: LieAlgebraModel,
    directions: ShearDirections,
    order: List[int],
    chart: CenteredJet,
    inverse: TruncatedPolyMap,
    b: Any,
) -> TruncatedPolyMap:
    field = chart.map.field
    ambient_matrix = permuted(ad_exp(model, directions.V, b, field), order)
    ambient = TruncatedPolyMap.linear(ambient_matrix, chart.map.variables, chart.map.order, field)
    return conjugate_through_chart(chart, ambient, inverse)


def lie_degeneration(
    model: LieAlgebraModel,
    directions: ShearDirections,
    k: int,
    base_x: Optional[Sequence[Any]] = None,
    include_subalgebra: bool = True,
) -> VerificationReport:
    """
    Conjugates Ad(exp(bV)) through the chart, substitutes b = y^k and takes y -> 0.

    Besides the limit profile shared with the torus and volume charts, the report
    checks the one-parameter group identities of Ad(exp(bV)), the linear-in-b shape of
    the subalgebra rows q_i and of the x1 row p_1, and, with `include_subalgebra`
    off and base_x zero, equality with the torus limit on the complement.

    Raises:
        OrderMismatch: If k < 2
        DimensionMismatch: If base_x does not have one entry per x-coordinate
    """
    if k < 2:
        raise OrderMismatch(f"Degeneration needs k >= 2, got {k}")
    order = chart_order(model, directions, include_subalgebra)
    nv = len(model.subalgebra) if include_subalgebra else 0
    nx = len(order) - nv - 1
    xs = tuple(parse_rational(x) for x in base_x) if base_x else tuple(Fraction(0) for _ in range(nx))
    if len(xs) != nx:
        raise DimensionMismatch(f"base_x needs {nx} coordinates for sl_{model.small} < sl_{model.size}, got {len(xs)}")

    params: Dict[str, Any] = {
        "small": model.small,
        "big": model.size,
        "k": k,
        "base_x": [format_rational(x) for x in xs],
    }
    if not include_subalgebra:
        params["include_subalgebra"] = False
    report = VerificationReport(scenario=ScenarioKind.LIE_DEGENERATION.value, params=params)
    logger.info(f"Degenerating Ad(exp(b {model.labels[directions.v_index]})) on sl_{model.small} < sl_{model.size}, k={k}")

    V = directions.V
    report.check(check_group_law(model, V), "Ad(exp(bV)) violates the one-parameter group law")
    report.check(check_killing_invariance(model, V), "Ad(exp(bV)) does not preserve the Killing form")
    report.check(check_unimodular(model, V), "Ad(exp(bV)) does not have determinant 1")
    report.check(check_complement_preserved(model, V), "Ad(exp(bV)) moves the complement into the subalgebra")

    field = RationalFunctionField(LIMIT_PARAM)
    chart = lie_chart_jet(nv, xs, k, field)
    inverse = jet_invert(chart.map)

    ad = permuted(model.ad_matrix(V), order)
    x1_linear = _row_image(ad[nv], chart.map)
    eta = TruncatedPoly.variable(nv + nx, chart.map.variables, k, field)
    report.check(x1_linear == eta, f"p1 has linear term ({x1_linear}) b instead of eta b")
    if include_subalgebra:
        shaped, described = _subalgebra_linear_terms(ad, nv, chart.map.variables)
        report.check(shaped, "a subalgebra perturbation q_i has a linear term outside {0, c alpha_j b}")
        report.note("linear terms: " + ", ".join(described))

    linear_zero, fully_zero = _trivial_linear_rows(model, V, order)
    report.note(f"trivial linear term implies trivial polynomial on {fully_zero} of {linear_zero} rows")
    if fully_zero != linear_zero:
        logger.warning(f"Rows with trivial linear term but nontrivial polynomial in sl_{model.size}")

    report.check(
        _conjugated(model, directions, order, chart, inverse, 0).is_identity(),
        "b = 0 does not give the identity family",
    )
    nu = _conjugated(model, directions, order, chart, inverse, field.gen ** k)
    try:
        limit = scalar_limit_at_zero(nu)
    except PoleAtZero as exc:
        report.fail(f"limit does not exist: {exc.message}")
        return report
    record_limit_profile(report, limit, ChartKind.LIE, len(order), k, component=nv)

    if not include_subalgebra and not any(xs):
        torus = scalar_limit_at_zero(torus_closed_form(TorusChartSpec(len(order), k), field.gen ** k))
        report.check(limit == torus, "complement-only limit differs from the torus limit")
    return report


def lie_degeneration_from_scenario(scenario: DegenerationScenario) -> VerificationReport:
    model = build_sl_embedding(scenario.small, scenario.big)
    directions = select_shear_directions(model)
    return lie_degeneration(model, directions, scenario.k, scenario.base_x or None)
