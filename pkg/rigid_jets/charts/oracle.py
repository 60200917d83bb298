"""
Floating-point cross-checks for the exact chart jets.

Taylor coefficients are estimated from samples of a closed-form evaluator on a small
complex polydisc around the base point; the discrete Fourier transform of the samples
gives the Cauchy coefficient integrals. The radius is halved until two estimates agree.
"""
import logging
import random
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from rigid_jets.charts.jets import centered_chart_jet, conjugated_family
from rigid_jets.charts.specs import TorusChartSpec, VolumeChartSpec, chart_variables
from rigid_jets.constants import OracleTarget, ScenarioKind
from rigid_jets.exceptions import OracleFailure, OrderMismatch
from rigid_jets.jetcore.numeric import NumericJet
from rigid_jets.reports import VerificationReport
from rigid_jets.resolvers import get_settings
from rigid_jets.utils import format_rational, monomials_up_to

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence[np.ndarray]], Sequence[np.ndarray]]


def identity_evaluator(coords: Sequence[np.ndarray]) -> List[np.ndarray]:
    return list(coords)


def torus_chart_evaluator(coords: Sequence[np.ndarray]) -> List[np.ndarray]:
    *xs, y = coords
    return [x * y for x in xs] + [y]


def volume_chart_evaluator(coords: Sequence[np.ndarray]) -> List[np.ndarray]:
    *xs, y = coords
    root = np.power(y, 1.0 / len(coords))
    return [x * root for x in xs] + [root]


def torus_conjugate_evaluator(point: Sequence[float], b: float) -> Evaluator:
    """
    Direct evaluation of mu^-1 o U(b, mu(p)) o mu, the shear acting on offsets of mu(p).
    """
    center = point[-1]

    def evaluate(coords: Sequence[np.ndarray]) -> List[np.ndarray]:
        image = torus_chart_evaluator(coords)
        image[0] = image[0] + b * (image[-1] - center)
        *us, last = image
        return [u / last for u in us] + [last]

    return evaluate


def _estimate(evaluator: Evaluator, point: np.ndarray, k: int, grid: int, radius: float, centered: bool):
    nvars = len(point)
    nodes = np.exp(2j * np.pi * np.arange(grid) / grid)
    mesh = np.meshgrid(*[p + radius * nodes for p in point], indexing="ij")
    with np.errstate(all="ignore"):
        values = evaluator(mesh)
    estimates = []
    for value in values:
        samples = np.broadcast_to(np.asarray(value, dtype=complex), mesh[0].shape)
        if not np.all(np.isfinite(samples)):
            raise OracleFailure(f"Evaluator is not finite near {tuple(point.real)} at radius {radius:g}")
        spectrum = np.fft.fftn(samples) / grid ** nvars
        start = 1 if centered else 0
        estimates.append({
            exps: complex(spectrum[exps]) / radius ** sum(exps)
            for exps in monomials_up_to(nvars, k, start)
        })
    return estimates


def _max_gap(first, second) -> float:
    return max(
        (abs(a[exps] - b[exps]) / max(1.0, abs(b[exps])) for a, b in zip(first, second) for exps in a),
        default=0.0,
    )


def numeric_jet_oracle(
    evaluator: Evaluator,
    point: Sequence[float],
    k: int,
    variables: Optional[Sequence[str]] = None,
    centered: bool = True,
    radius: Optional[float] = None,
    grid: Optional[int] = None,
    tolerance: Optional[float] = None,
    max_halvings: int = 8,
) -> NumericJet:
    """
    Numeric order-k jet of `evaluator` at `point`.

    The evaluator takes one complex array per coordinate and returns one array per
    component. With `centered` the constant term is dropped, so the result compares
    directly with a CenteredJet. The default radius is a quarter of the distance of
    the last coordinate from 0 (the exceptional divisor), capped at 1/4.

    Raises:
        OracleFailure: If the evaluator is not finite near the point, or successive
            radii never agree within `tolerance`
    """
    settings = get_settings()
    grid = grid or settings.ORACLE_GRID
    tolerance = tolerance if tolerance is not None else settings.ORACLE_TOLERANCE
    if grid <= k:
        raise OrderMismatch(f"An oracle grid of {grid} samples per axis cannot resolve order {k}")
    base = np.asarray(point, dtype=complex)
    if radius is None:
        radius = 0.25 * min(1.0, abs(point[-1]) or 1.0)

    previous = _estimate(evaluator, base, k, grid, radius, centered)
    for _ in range(max_halvings):
        radius /= 2
        current = _estimate(evaluator, base, k, grid, radius, centered)
        gap = _max_gap(previous, current)
        if gap <= tolerance / 10:
            names = tuple(variables) if variables is not None else tuple(f"w{i + 1}" for i in range(len(base)))
            return NumericJet(names, k, tuple(current))
        logger.debug(f"Oracle estimates differ by {gap:g} at radius {radius:g}; halving")
        previous = current
    raise OracleFailure(f"Numeric jet at {tuple(point)} did not stabilize after {max_halvings} halvings")


def _random_point(rng: random.Random, n: int) -> List[Fraction]:
    # x in [-1, 1], last coordinate in [3/10, 1] keeps the point off the divisor
    return [Fraction(rng.randint(-10, 10), 10) for _ in range(n - 1)] + [Fraction(rng.randint(3, 10), 10)]


def oracle_crosscheck(
    target: OracleTarget,
    n: int,
    k: int,
    points: Optional[int] = None,
    seed: int = 0,
    b: Fraction = Fraction(1),
) -> VerificationReport:
    """
    Compares exact chart jets with numeric Taylor estimates at random off-divisor points.
    """
    settings = get_settings()
    points = points if points is not None else settings.ORACLE_POINTS
    volume = target is OracleTarget.VOLUME_CHART
    tolerance = settings.VOLUME_ORACLE_TOLERANCE if volume else settings.ORACLE_TOLERANCE
    params = {"target": target.value, "n": n, "k": k, "points": points}
    if target is OracleTarget.CONJUGATE:
        params["b"] = format_rational(b)
    report = VerificationReport(scenario=ScenarioKind.ORACLE_CROSSCHECK.value, params=params)

    rng = random.Random(seed)
    variables = chart_variables(n)
    for _ in range(points):
        point = _random_point(rng, n)
        floats = [float(v) for v in point]
        param = None
        if target is OracleTarget.TORUS_CHART:
            symbolic = centered_chart_jet(TorusChartSpec(n, k), point).map
            evaluator: Evaluator = torus_chart_evaluator
        elif volume:
            # the last coordinate is y'; the exact jet lives in QQ(s) with s = y'^(1/n)
            symbolic = centered_chart_jet(VolumeChartSpec(n, k), point[:-1] + [None]).map
            param = floats[-1] ** (1.0 / n)
            evaluator = volume_chart_evaluator
        else:
            symbolic = conjugated_family(TorusChartSpec(n, k), b, point)
            evaluator = torus_conjugate_evaluator(floats, float(b))
        numeric = numeric_jet_oracle(evaluator, floats, k, variables, tolerance=tolerance)
        agrees = numeric.agrees_with(symbolic, param=param, rtol=tolerance, atol=tolerance)
        if not agrees:
            logger.warning(f"Oracle off by {numeric.max_abs_difference(symbolic, param):.3g} at {floats}")
        report.check(agrees, f"numeric jet disagrees with the exact jet at {[format_rational(v) for v in point]}")
    if report.passed:
        report.note(f"{points} random points agree within relative tolerance {tolerance:g}")
    return report
