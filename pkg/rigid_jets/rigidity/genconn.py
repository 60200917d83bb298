"""
The canonical generalized connection on the blow-up.

The structure at a chart point p is the GL(n)-class of the 2-jet of the blow-down
(x1, ..., x{n-1}, y) -> (x1 y, ..., x{n-1} y, y) at p. Its isometry jets, the
stabilizer of the blow-down 2-jet and the (1,2)-rigidity system live here.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import ring as polynomial_ring

from rigid_jets.charts.jets import centered_chart_jet, chart_image
from rigid_jets.charts.specs import TorusChartSpec, chart_variables
from rigid_jets.constants import GLSide, Matrix, ScenarioKind
from rigid_jets.exceptions import (
    DimensionMismatch,
    InvalidModel,
    NonZeroConstantTerm,
    OrderMismatch,
    UnresolvedSystem,
)
from rigid_jets.jetcore import linalg
from rigid_jets.jetcore.maps import TruncatedPolyMap, apply_linear, jet_compose, jet_invert, jet_truncate
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD
from rigid_jets.reports import VerificationReport
from rigid_jets.rigidity.kernel import KernelReport, solve_kernel, truncates_to_identity
from rigid_jets.utils import format_matrix, monomials_up_to, parse_rational, unit_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneralizedConnectionSpec:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DimensionMismatch(f"The blow-up needs n >= 2, got {self.n}")

    @property
    def variables(self) -> Tuple[str, ...]:
        return chart_variables(self.n)

    def blow_down_jet(self, point: Optional[Sequence[Any]] = None, order: int = 2) -> TruncatedPolyMap:
        """
        Centered jet of the blow-down at a rational chart point, by default the origin
        of the chart, which lies on the exceptional divisor.
        """
        if point is None:
            point = [0] * self.n
        if any(v is None for v in point):
            raise InvalidModel("The generalized connection is evaluated at rational points only")
        return centered_chart_jet(TorusChartSpec(self.n, max(order, 2)), point).map.truncate(order)


def _matrix_symbols(n: int) -> List[Symbol]:
    return [Symbol(f"a{i + 1}_{j + 1}") for i in range(n) for j in range(n)]


def _as_ring_element(ring, poly: TruncatedPoly, offset: int):
    padding = (0,) * offset
    return ring.from_dict({padding + exps: QQ_FIELD.to_domain(c) for exps, c in poly.terms.items()})


def _evaluate(expr, values: Dict[int, Fraction]) -> Fraction:
    total = Fraction(0)
    for monom, coeff in expr.terms():
        term = QQ_FIELD.from_domain(coeff)
        for index, power in enumerate(monom):
            if power:
                term *= values[index] ** power
        total += term
    return total


def _variables_of(expr) -> List[int]:
    return sorted({i for monom in expr.monoms() for i, e in enumerate(monom) if e})


def _total_degree(expr) -> int:
    return max(sum(monom) for monom in expr.monoms())


def _rational_roots(expr, index: int) -> List[Fraction]:
    t = Symbol("t")
    univariate = sum(
        (Rational(int(c.numerator), int(c.denominator)) * t ** monom[index] for monom, c in expr.terms()),
        Rational(0),
    )
    roots = Poly(univariate, t, domain="QQ").ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def solve_polynomial_system(ring, equations: Sequence[Any]) -> List[Tuple[Fraction, ...]]:
    """
    All rational solutions of a polynomial system in the sympy PolyRing `ring`, given it
    has finitely many solutions.

    Works by linear elimination, branching on the rational roots of any univariate
    equation once no linear one is left.

    Raises:
        UnresolvedSystem: If the solution set is infinite, or an equation set is
            reached that is neither linear nor univariate anywhere
    """
    found: List[Tuple[Fraction, ...]] = []

    def solve(eqs, values: Dict[int, Fraction], eliminated: List[Tuple[int, Any]]) -> None:
        eqs = [e for e in eqs if e]
        if any(e.is_ground for e in eqs):
            return
        if not eqs:
            bound = set(values) | {i for i, _ in eliminated}
            free = [ring.gens[i] for i in range(ring.ngens) if i not in bound]
            if free:
                raise UnresolvedSystem(f"Solution set is infinite; free unknowns {free}")
            solution = dict(values)
            for index, expr in reversed(eliminated):
                solution[index] = _evaluate(expr, solution)
            found.append(tuple(solution[i] for i in range(ring.ngens)))
            return
        for e in eqs:
            if _total_degree(e) == 1:
                index = _variables_of(e)[0]
                gen = ring.gens[index]
                expr = gen - e.quo_ground(e.coeff(gen))
                solve([q.compose(gen, expr) for q in eqs], values, eliminated + [(index, expr)])
                return
        for e in eqs:
            indices = _variables_of(e)
            if len(indices) == 1:
                index = indices[0]
                gen = ring.gens[index]
                for root in _rational_roots(e, index):
                    value = QQ(root.numerator, root.denominator)
                    solve([q.compose(gen, value) for q in eqs], {**values, index: root}, eliminated)
                return
        raise UnresolvedSystem(f"Cannot reduce {len(eqs)} nonlinear multivariate equations")

    solve(list(equations), {}, [])
    return sorted(found)


def gl_stabilizer(two_jet: TruncatedPolyMap, side: GLSide = GLSide.RIGHT) -> List[Matrix]:
    """
    Every invertible A with j o A = j (RIGHT, precomposition) or A o j = j (LEFT).

    Raises:
        DimensionMismatch: If the jet is not square
        NonZeroConstantTerm: If the jet moves the base point
        UnresolvedSystem: If the stabilizer is infinite
    """
    n = two_jet.source_dim
    if two_jet.target_dim != n:
        raise DimensionMismatch("The GL(n) action needs a jet R^n -> R^n")
    if not two_jet.has_zero_constant_term():
        raise NonZeroConstantTerm("The stabilizer is taken for jets fixing the base point")
    a_symbols = _matrix_symbols(n)
    w_symbols = [Symbol(v) for v in two_jet.variables]
    ring, *_ = polynomial_ring(a_symbols + w_symbols, QQ)
    na = len(a_symbols)
    a = [[ring.gens[i * n + j] for j in range(n)] for i in range(n)]
    w = [ring.gens[na + j] for j in range(n)]
    components = [_as_ring_element(ring, c, na) for c in two_jet]

    if side is GLSide.RIGHT:
        moved = [sum((a[i][j] * w[j] for j in range(n)), ring.zero) for i in range(n)]
        acted = [c.compose(list(zip(w, moved))) for c in components]
    else:
        acted = [sum((a[i][j] * components[j] for j in range(n)), ring.zero) for i in range(n)]

    a_ring, *_ = polynomial_ring(a_symbols, QQ)
    # one equation per component and monomial in w
    equations = []
    for left, right in zip(acted, components):
        by_w: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Any]] = {}
        for monom, coeff in (left - right).terms():
            by_w.setdefault(monom[na:], {})[monom[:na]] = coeff
        equations.extend(a_ring.from_dict(terms) for terms in by_w.values())

    solutions = []
    for values in solve_polynomial_system(a_ring, equations):
        matrix = [[values[i * n + j] for j in range(n)] for i in range(n)]
        if linalg.determinant(QQ_FIELD, matrix) != 0:
            solutions.append(matrix)
    logger.debug(f"{side.value} stabilizer of a {n}-dimensional 2-jet has {len(solutions)} element(s)")
    return solutions


def _chart_point(point: Sequence[Any]) -> List[Fraction]:
    return [parse_rational(v) for v in point]


def _preimage(image: Sequence[Fraction]) -> List[Fraction]:
    *zs, y = image
    if y == 0:
        raise InvalidModel("The image point lies on the exceptional divisor")
    return [z / y for z in zs] + [y]


def conjugated_affine_jet(
    spec: GeneralizedConnectionSpec,
    p: Sequence[Any],
    matrix: Matrix,
    translation: Optional[Sequence[Any]] = None,
) -> Tuple[TruncatedPolyMap, List[Fraction]]:
    """
    The 2-jet at p of the lift of z -> M z + t through the blow-down, with the image
    point p'. Both p and p' must lie off the divisor.
    """
    point = _chart_point(p)
    if point[-1] == 0:
        raise InvalidModel("The base point lies on the exceptional divisor")
    shift = [parse_rational(v) for v in translation] if translation is not None else [Fraction(0)] * spec.n
    z = chart_image(TorusChartSpec(spec.n, 2), point)
    moved = [sum((parse_rational(m) * v for m, v in zip(row, z)), Fraction(0)) + t for row, t in zip(matrix, shift)]
    image = _preimage(moved)
    source = spec.blow_down_jet(point)
    target_inverse = jet_invert(spec.blow_down_jet(image))
    return jet_compose(target_inverse, apply_linear(matrix, source)), image


def genconn_is_isometry_jet(
    spec: GeneralizedConnectionSpec,
    h: TruncatedPolyMap,
    p: Sequence[Any],
    image: Optional[Sequence[Any]] = None,
) -> bool:
    """
    True iff Q_{p'} o h = A o Q_p at order 2 for some A in GL(n), where Q is the
    centered blow-down jet and p' = `image` (default p). A is fixed by the linear
    parts, A = L(Q_{p'}) L(h) L(Q_p)^-1, and then checked in degree 2.

    Raises:
        InvalidModel: If p or p' lies on the exceptional divisor
        OrderMismatch: If h has order below 2
    """
    point = _chart_point(p)
    target = _chart_point(image) if image is not None else point
    if point[-1] == 0 or target[-1] == 0:
        raise InvalidModel("Isometry jets are tested off the exceptional divisor")
    if h.order < 2:
        raise OrderMismatch(f"Isometry of the connection needs a 2-jet, got order {h.order}")
    h2 = jet_truncate(h, 2)
    source = spec.blow_down_jet(point)
    target_jet = spec.blow_down_jet(target)
    A = linalg.mat_mul(
        QQ_FIELD,
        linalg.mat_mul(QQ_FIELD, target_jet.linear_part(), h2.linear_part()),
        linalg.inverse(QQ_FIELD, source.linear_part()),
    )
    return jet_compose(target_jet, h2) == apply_linear(A, source)


def genconn_rigidity_check(n: int) -> KernelReport:
    """
    Solves F^i F^n = x_i y (i < n) and F^n = y modulo degree 4 for F = id + P with P of
    degrees 2 and 3. The products P^i P^n start in degree 4, so the system is linear.
    """
    spec = GeneralizedConnectionSpec(n)
    variables = spec.variables
    base = TruncatedPolyMap.identity(variables, 3)
    y = base[n - 1]
    unknowns = [(i, exps) for i in range(n) for exps in monomials_up_to(n, 3, start=2)]

    def residual(F: TruncatedPolyMap) -> List[TruncatedPoly]:
        equations = [F[i] * F[n - 1] - base[i] * y for i in range(n - 1)]
        equations.append(F[n - 1] - y)
        return equations

    return solve_kernel(base, unknowns, residual, monomials_up_to(n, 3), order=3)


def expected_genconn_dimension(n: int) -> int:
    return (n - 1) * comb(n + 2, 3)


def _has_cubic_shape(solution: TruncatedPolyMap) -> bool:
    # P^n = 0 and P^i homogeneous of degree 3
    difference = solution.difference_from_identity()
    n = solution.source_dim
    if not difference[n - 1].is_zero():
        return False
    return all(d.is_zero() or (d.lowest_degree() == 3 and d.degree() == 3) for d in difference)


def verify_generalized_connection(n: int) -> VerificationReport:
    report = VerificationReport(scenario=ScenarioKind.GENCONN_RIGIDITY.value, params={"n": n})
    logger.info(f"Generalized connection rigidity for n={n}")
    kernel = genconn_rigidity_check(n)
    report.kernel_dimension = kernel.dimension
    expected = expected_genconn_dimension(n)
    report.check(kernel.dimension == expected, f"solution space has dimension {kernel.dimension}, expected {expected}")
    report.check(kernel.forced_triviality_order >= 2, f"forced-triviality order is {kernel.forced_triviality_order}")
    report.check(truncates_to_identity(kernel, 2), "a solution is nontrivial at order 2")
    report.check(all(_has_cubic_shape(s) for s in kernel.basis), "a solution is not a pure cubic in x-components")
    report.note(f"forced-triviality order {kernel.forced_triviality_order}: r^(2,1) is injective on r^(3,2)(Is^3)")

    spec = GeneralizedConnectionSpec(n)
    point = [Fraction(1, 2)] * (n - 1) + [Fraction(1)]
    identity = linalg.identity(QQ_FIELD, n)
    translated, image = conjugated_affine_jet(spec, point, identity, [Fraction(1, 3)] * n)
    report.check(genconn_is_isometry_jet(spec, translated, point, image), "a lifted translation is not an isometry")
    homothety = [[Fraction(2) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    scaled, image = conjugated_affine_jet(spec, point, homothety)
    report.check(genconn_is_isometry_jet(spec, scaled, point, image), "a lifted linear map is not an isometry")
    perturbed = TruncatedPolyMap.identity(spec.variables, 2)
    bump = TruncatedPoly(spec.variables, 2, {tuple(2 * e for e in unit_index(n, 0)): 1})
    perturbed = TruncatedPolyMap((perturbed[0] + bump,) + perturbed.components[1:])
    report.check(not genconn_is_isometry_jet(spec, perturbed, point), "a quadratic perturbation passes as an isometry")
    return report


def verify_gl_stabilizer(n: int) -> VerificationReport:
    """
    Stabilizer of the blow-down 2-jet at the chart origin, for both GL actions.
    """
    report = VerificationReport(scenario=ScenarioKind.GL_STABILIZER.value, params={"n": n})
    logger.info(f"GL stabilizer of the blow-down 2-jet for n={n}")
    jet = GeneralizedConnectionSpec(n).blow_down_jet()
    identity = linalg.identity(QQ_FIELD, n)
    for side in (GLSide.RIGHT, GLSide.LEFT):
        try:
            stabilizer = gl_stabilizer(jet, side)
        except UnresolvedSystem as exc:
            logger.warning(f"Unresolved {side.value} stabilizer system for n={n}")
            report.fail(f"{side.value} stabilizer: {exc.message}")
            continue
        report.check(stabilizer == [identity], f"{side.value} stabilizer has {len(stabilizer)} element(s), expected only the identity")
        report.note(f"{side.value} stabilizer: " + ", ".join(format_matrix(m) for m in stabilizer))
    return report
