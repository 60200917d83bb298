"""
Centered jets of the blow-up charts and of the conjugated shear families.

Every family is computed as M_p^-1 o U o M_p, where M_p is the centered chart jet at
the base point p and U the linear action on the image offsets.
"""
import logging
from typing import Any, List, Optional, Sequence, Tuple, Union

from rigid_jets.charts.specs import ShearSpec, TorusChartSpec, VolumeChartSpec
from rigid_jets.exceptions import DimensionMismatch
from rigid_jets.jetcore.linalg import identity
from rigid_jets.jetcore.maps import CenteredJet, TruncatedPolyMap, jet_compose, jet_invert
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD, ScalarField
from rigid_jets.jetcore.series import series_binomial
from rigid_jets.utils import parse_rational

logger = logging.getLogger(__name__)

ChartSpec = Union[TorusChartSpec, VolumeChartSpec]


def base_point(spec: ChartSpec, point: Optional[Sequence[Any]] = None) -> Tuple[ScalarField, Tuple[Any, ...]]:
    """
    Resolves a base point to (field, coordinates).

    `point` lists the n-1 rational x-coordinates followed by the last coordinate, which
    is y for the torus chart and s = y'^delta for the volume chart. A last coordinate of
    None (or no point at all) means the symbolic limit parameter; the field is then
    QQ(param), otherwise QQ.
    """
    if point is None:
        point = [0] * (spec.n - 1) + [None]
    if len(point) != spec.n:
        raise DimensionMismatch(f"Base point needs {spec.n} coordinates, got {len(point)}")
    *xs, last = point
    if last is None:
        field: ScalarField = spec.field
        last_value = field.gen
    else:
        field = QQ_FIELD
        last_value = parse_rational(last)
    return field, tuple(field.convert(parse_rational(x)) for x in xs) + (last_value,)


def _torus_components(n: int, order: int, field: ScalarField, coords: Sequence[Any], variables) -> List[TruncatedPoly]:
    *xs, y = coords
    eta = TruncatedPoly.variable(n - 1, variables, order, field)
    components = []
    for i, x in enumerate(xs):
        xi = TruncatedPoly.variable(i, variables, order, field)
        # (x + xi)(y + eta) - x y
        components.append(xi.scale(y) + eta.scale(x) + xi * eta)
    components.append(eta)
    return components


def _volume_components(spec: VolumeChartSpec, field: ScalarField, coords: Sequence[Any]) -> List[TruncatedPoly]:
    variables = spec.variables
    *xs, s = coords
    eta = TruncatedPoly.variable(spec.n - 1, variables, spec.k, field)
    # (y' + eta)^delta - s with y' = s^n, written as s * ((1 + eta / s^n)^delta - 1)
    ratio = eta.scale(field.one / s ** spec.n)
    w = (series_binomial(-spec.delta, ratio) - 1).scale(s)
    components = []
    for i, x in enumerate(xs):
        xi = TruncatedPoly.variable(i, variables, spec.k, field)
        components.append(w.scale(x) + xi.scale(s) + xi * w)
    components.append(w)
    return components


def chart_image(spec: ChartSpec, coords: Sequence[Any]) -> Tuple[Any, ...]:
    *xs, last = coords
    return tuple(x * last for x in xs) + (last,)


def centered_chart_jet(spec: ChartSpec, point: Optional[Sequence[Any]] = None) -> CenteredJet:
    """
    M_p(w) = mu(p + w) - mu(p) as an exact jet of order spec.k.
    """
    field, coords = base_point(spec, point)
    if isinstance(spec, VolumeChartSpec):
        components = _volume_components(spec, field, coords)
    else:
        components = _torus_components(spec.n, spec.k, field, coords, spec.variables)
    return CenteredJet(coords, TruncatedPolyMap(components))


def centered_chart_jets(spec: ChartSpec, point: Optional[Sequence[Any]] = None) -> Tuple[CenteredJet, CenteredJet]:
    """
    The centered chart jet M_p and its inverse in D^k.

    Raises:
        SingularLinearPart: If p lies on the exceptional divisor (numeric y = 0)
    """
    chart = centered_chart_jet(spec, point)
    inverse = jet_invert(chart.map)
    logger.debug(f"Inverted {type(spec).__name__} chart jet at {chart.base_point}")
    return chart, CenteredJet(chart_image(spec, chart.base_point), inverse)


def shear_jet(
    spec: ShearSpec,
    dims: int,
    order: int,
    field: ScalarField = QQ_FIELD,
    variables: Optional[Sequence[str]] = None,
) -> TruncatedPolyMap:
    """
    The linear jet of U(b): (u1, ..., un) -> (u1 + b * u_source, u2, ..., un).
    """
    source, target = spec.indices(dims)
    matrix = identity(field, dims)
    matrix[target][source] = field.convert(spec.b)
    names = tuple(variables) if variables is not None else tuple(f"u{i + 1}" for i in range(dims))
    return TruncatedPolyMap.linear(matrix, names, order, field)


def conjugate_through_chart(
    chart: Union[CenteredJet, TruncatedPolyMap],
    ambient: TruncatedPolyMap,
    inverse: Optional[TruncatedPolyMap] = None,
) -> TruncatedPolyMap:
    """
    The centered family nu = M_p^-1 o ambient o M_p.

    Pass `inverse` when M_p^-1 is already known, to avoid inverting again.
    """
    chart_map = chart.map if isinstance(chart, CenteredJet) else chart
    if ambient.source_dim != chart_map.target_dim or ambient.target_dim != chart_map.target_dim:
        raise DimensionMismatch("The ambient map must act on the chart's image offsets")
    if inverse is None:
        inverse = jet_invert(chart_map)
    return jet_compose(inverse, jet_compose(ambient, chart_map))


def torus_closed_form(spec: TorusChartSpec, b: Any) -> TruncatedPolyMap:
    """
    (xi1 + b eta (y + eta)^-1, xi2, ..., eta), expanded as b eta y^-1 sum_i (-eta/y)^i.
    """
    field = spec.field
    y = field.gen
    identity_map = TruncatedPolyMap.identity(spec.variables, spec.k, field)
    eta = identity_map[spec.n - 1]
    ratio = eta.scale(field.one / y)
    first = identity_map[0] + (ratio * series_binomial(1, ratio)).scale(b)
    return TruncatedPolyMap((first,) + identity_map.components[1:])


def volume_closed_form(spec: VolumeChartSpec, b: Any) -> TruncatedPolyMap:
    """
    (xi1 + b (1 - (1 + eta/y')^-delta), xi2, ..., eta) with y' = s^n.
    """
    field = spec.field
    s = field.gen
    identity_map = TruncatedPolyMap.identity(spec.variables, spec.k, field)
    ratio = identity_map[spec.n - 1].scale(field.one / s ** spec.n)
    first = identity_map[0] + (1 - series_binomial(spec.delta, ratio)).scale(b)
    return TruncatedPolyMap((first,) + identity_map.components[1:])


def conjugated_family(
    spec: ChartSpec,
    b: Any,
    point: Optional[Sequence[Any]] = None,
    jets: Optional[Tuple[CenteredJet, CenteredJet]] = None,
) -> TruncatedPolyMap:
    """
    nu(b, p) for the shear U(b) on a torus or volume chart.
    """
    chart, inverse = jets if jets is not None else centered_chart_jets(spec, point)
    field = chart.map.field
    ambient = shear_jet(ShearSpec(field.convert(b)), spec.n, spec.k, field)
    return conjugate_through_chart(chart, ambient, inverse.map)


def verify_torus_closed_form(spec: TorusChartSpec, base_x: Optional[Sequence[Any]] = None) -> bool:
    """
    Checks nu(b, p) against the closed form for symbolic b.

    Every coefficient of nu is a polynomial of degree <= k in b, so agreement at the
    k + 1 values b = 0, ..., k settles the identity; b = y^k is checked as well.
    """
    point = list(base_x) + [None] if base_x is not None else None
    jets = centered_chart_jets(spec, point)
    field = spec.field
    samples = [field.convert(value) for value in range(spec.k + 1)] + [field.gen ** spec.k]
    for b in samples:
        if conjugated_family(spec, b, jets=jets) != torus_closed_form(spec, b):
            logger.warning(f"Closed form mismatch for n={spec.n}, k={spec.k} at b={b}")
            return False
    return True
