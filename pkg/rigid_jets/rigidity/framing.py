"""
Isometry jets of polynomial framings.

A framing is n polynomial vector fields X_1, ..., X_n on R^n. A jet f at p (written in
offsets w of p, so f(0) = 0) preserves the framing to order l when the push-forward
defect Df(w) X_k(p + w) - X_k(p + f(w)) vanishes in every degree below l.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring as polynomial_ring

from rigid_jets.constants import Matrix, ScenarioKind
from rigid_jets.exceptions import (
    DimensionMismatch,
    InvalidModel,
    NonZeroConstantTerm,
    OrderMismatch,
    SingularLinearPart,
    VariableMismatch,
)
from rigid_jets.jetcore import linalg
from rigid_jets.jetcore.maps import TruncatedPolyMap, jet_compose
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD
from rigid_jets.jetcore.serialization import serialize_poly
from rigid_jets.reports import VerificationReport
from rigid_jets.resolvers import get_settings
from rigid_jets.rigidity.kernel import KernelReport, affine_system, perturb, solve_kernel
from rigid_jets.utils import (
    format_matrix,
    format_rational,
    monomials_of_degree,
    monomials_up_to,
    offset_names,
    parse_rational,
)

logger = logging.getLogger(__name__)


def framing_variables(n: int) -> Tuple[str, ...]:
    return ("x",) if n == 1 else tuple(offset_names("x", n))


@dataclass(frozen=True)
class FramingSpec:
    """
    n vector fields on R^n; `fields[k][m]` is the m-th component a_k^m of X_k.
    """

    n: int
    fields: Tuple[Tuple[TruncatedPoly, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch(f"A framing needs n >= 1, got {self.n}")
        fields = tuple(tuple(components) for components in self.fields)
        if len(fields) != self.n or any(len(components) != self.n for components in fields):
            raise DimensionMismatch(f"A framing of R^{self.n} needs {self.n} fields of {self.n} components")
        variables = fields[0][0].variables
        for components in fields:
            for component in components:
                if component.variables != variables:
                    raise VariableMismatch("All framing components must share one variable list")
                if component.field != QQ_FIELD:
                    raise InvalidModel("Framing coefficients must be rational")
        if len(variables) != self.n:
            raise VariableMismatch(f"Framing of R^{self.n} written in variables {variables}")
        object.__setattr__(self, "fields", fields)
        if wedge_polynomial(self).is_zero():
            raise InvalidModel("X_1 ^ ... ^ X_n vanishes identically")

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.fields[0][0].variables

    @classmethod
    def from_terms(cls, fields: Sequence[Sequence[Dict[Tuple[int, ...], Any]]]) -> "FramingSpec":
        """
        Builds a framing from plain term maps, e.g. `[[{(2,): 1}]]` for x^2 d/dx.
        """
        n = len(fields)
        variables = framing_variables(n)
        polys = []
        for components in fields:
            row = []
            for terms in components:
                degree = max((sum(e) for e in terms), default=0)
                row.append(TruncatedPoly(variables, degree, terms))
            polys.append(tuple(row))
        return cls(n, tuple(polys))

    def to_payload(self) -> List[List[Dict[str, Any]]]:
        return [[serialize_poly(component) for component in components] for components in self.fields]


def wedge_polynomial(framing: FramingSpec) -> TruncatedPoly:
    """
    det(a_k^m) as an exact polynomial, computed over QQ[x1, ..., xn].
    """
    variables = framing.variables
    ring, *_ = polynomial_ring([Symbol(v) for v in variables], QQ)
    rows = [
        [ring.from_dict({e: QQ_FIELD.to_domain(c) for e, c in component.terms.items()}) for component in components]
        for components in framing.fields
    ]
    det = DomainMatrix(rows, (framing.n, framing.n), ring.to_domain()).det()
    terms = {monom: QQ_FIELD.from_domain(coeff) for monom, coeff in det.terms()}
    degree = max((sum(m) for m in terms), default=0)
    return TruncatedPoly(variables, degree, terms)


def _point(framing: FramingSpec, p: Sequence[Any]) -> Tuple[Fraction, ...]:
    if len(p) != framing.n:
        raise DimensionMismatch(f"Point {tuple(p)} is not in R^{framing.n}")
    return tuple(parse_rational(v) for v in p)


def wedge_vanishing_order(framing: FramingSpec, p: Sequence[Any]) -> int:
    """
    Order of vanishing of X_1 ^ ... ^ X_n at p; 0 where the framing is a frame.
    """
    order = wedge_polynomial(framing).shift(_point(framing, p)).lowest_degree()
    if order is None:
        raise InvalidModel("X_1 ^ ... ^ X_n vanishes identically")
    return order


def _shifted_field(components: Sequence[TruncatedPoly], point: Tuple[Fraction, ...], order: int) -> TruncatedPolyMap:
    return TruncatedPolyMap([component.shift(point).lift(order) for component in components])


def framing_residual(framing: FramingSpec, f: TruncatedPolyMap, p: Sequence[Any], l: int) -> List[TruncatedPoly]:
    """
    Df(w) X_k(p + w) - X_k(p + f(w)) to order l, flattened over k and then components.

    `f` is read as the polynomial it stores and lifted to order l when needed.

    Raises:
        DimensionMismatch, VariableMismatch: If f does not act on the framing's space
        NonZeroConstantTerm: If f moves p
    """
    if l < 1:
        raise OrderMismatch(f"Residual order must be at least 1, got {l}")
    if f.source_dim != framing.n or f.target_dim != framing.n:
        raise DimensionMismatch(f"Jet of R^{f.source_dim} -> R^{f.target_dim} for a framing of R^{framing.n}")
    if f.variables != framing.variables:
        raise VariableMismatch(f"Jet variables {f.variables} differ from framing variables {framing.variables}")
    if not f.has_zero_constant_term():
        raise NonZeroConstantTerm("An isometry jet at p must fix p")
    point = _point(framing, p)
    g = f.lift(l)
    jacobian = g.jacobian()
    residual = []
    for components in framing.fields:
        shifted = _shifted_field(components, point, l)
        composed = jet_compose(shifted, g)
        for m in range(framing.n):
            pushed = TruncatedPoly.zero(g.variables, l, QQ_FIELD)
            for j in range(framing.n):
                pushed = pushed + jacobian[m][j] * shifted[j]
            residual.append(pushed - composed[m])
    return residual


def is_isometry_jet(framing: FramingSpec, f: TruncatedPolyMap, p: Sequence[Any], l: int) -> bool:
    return all(r.truncate(l - 1).is_zero() for r in framing_residual(framing, f, p, l))


def framing_kernel_top_order(framing: FramingSpec, p: Sequence[Any], l: int) -> KernelReport:
    """
    Isometry jets identity + P with P homogeneous of degree l.

    The defect below degree l is linear in P: only Df contributes there, and it
    contributes DP(w) X(p) in degree l - 1.
    """
    if l < 2:
        raise OrderMismatch(f"The kernel of the truncation needs l >= 2, got {l}")
    n = framing.n
    base = TruncatedPolyMap.identity(framing.variables, l)
    unknowns = [(m, exps) for m in range(n) for exps in monomials_of_degree(n, l)]
    return solve_kernel(
        base,
        unknowns,
        lambda g: framing_residual(framing, g, p, l),
        monomials_up_to(n, l - 1),
        order=l,
    )


def _admits_extension(framing: FramingSpec, p: Sequence[Any], l: int, linear: Matrix) -> bool:
    n = framing.n
    f = TruncatedPolyMap.linear(linear, framing.variables, l)

    def residual(g: TruncatedPolyMap) -> List[TruncatedPoly]:
        return framing_residual(framing, g, p, l)

    if any(r.constant_term for r in residual(f)):
        return False
    for degree in range(2, l + 1):
        unknowns = [(m, exps) for m in range(n) for exps in monomials_of_degree(n, degree)]
        rows, rhs = affine_system(f, unknowns, residual, monomials_of_degree(n, degree - 1))
        particular, _ = linalg.solve_affine(QQ_FIELD, rows, rhs, len(unknowns))
        if particular is None:
            logger.debug(f"Linear part {linear} has no extension at degree {degree}")
            return False
        # free coefficients are pinned to zero; exact only up to order j + 1
        f = perturb(f, unknowns, particular)
    return True


def framing_linear_part_search(
    framing: FramingSpec,
    p: Sequence[Any],
    l: int,
    candidates: Optional[Sequence[Matrix]] = None,
) -> List[Matrix]:
    """
    The candidate linear parts L that extend, degree by degree, to an isometry jet of
    order l at p. Defaults to `CANDIDATE_RESOLVER(n)` from the settings.

    Free coefficients are pinned to zero at each degree instead of searching their
    affine space. The answer is exact for l <= j + 1, j the vanishing order of the
    wedge at p, which is the order `verify_framing` searches at. Above that a
    candidate may be dropped even though some other choice of free coefficients
    extends it; a warning is logged.

    Raises:
        SingularLinearPart: If a candidate is not invertible
    """
    if candidates is None:
        candidates = get_settings().CANDIDATE_RESOLVER(framing.n)
    j = wedge_vanishing_order(framing, p)
    if l > j + 1:
        logger.warning(f"Linear part search at order {l} > j + 1 = {j + 1} may miss extendable candidates")
    survivors = []
    for candidate in candidates:
        matrix = [[parse_rational(v) for v in row] for row in candidate]
        if len(matrix) != framing.n or any(len(row) != framing.n for row in matrix):
            raise DimensionMismatch(f"Candidate {candidate} is not {framing.n} x {framing.n}")
        if linalg.determinant(QQ_FIELD, matrix) == 0:
            raise SingularLinearPart(f"Candidate linear part {candidate} is singular")
        if _admits_extension(framing, p, l, matrix):
            survivors.append(matrix)
    return survivors



def verify_framing(
    framing: FramingSpec,
    p: Sequence[Any],
    l: int,
    candidates: Optional[Sequence[Matrix]] = None,
    expected_survivors: Optional[int] = None,
) -> VerificationReport:
    """
    Kernel of the truncation at order l, plus the linear-part search at order j + 1
    where j is the vanishing order of the wedge at p.

    A non-identity survivor fails the report, except for the one-dimensional odd-j
    case where f(x) = -x is an exact isometry; that case is flagged in the notes.
    """
    point = _point(framing, p)
    report = VerificationReport(
        scenario=ScenarioKind.FRAMING_KERNEL.value,
        params={
            "n": framing.n,
            "l": l,
            "point": [format_rational(v) for v in point],
            "vector_fields": framing.to_payload(),
        },
    )
    logger.info(f"Framing kernel for n={framing.n}, l={l} at {report.params['point']}")
    j = wedge_vanishing_order(framing, point)
    report.note(f"wedge vanishes to order {j} at p")

    kernel = framing_kernel_top_order(framing, point, l)
    report.kernel_dimension = kernel.dimension
    report.check(
        all(is_isometry_jet(framing, f, point, l) for f in kernel.basis),
        "a kernel basis element is not an isometry jet",
    )
    if j == 0:
        report.check(kernel.dimension == 0, f"frame at p has a {kernel.dimension}-dimensional kernel at order {l}")

    identity = linalg.identity(QQ_FIELD, framing.n)
    report.check(_admits_extension(framing, point, j + 1, identity), "identity linear part does not extend")
    survivors = framing_linear_part_search(framing, point, j + 1, candidates)
    report.note(f"linear parts surviving at order {j + 1}: " + ", ".join(format_matrix(m) for m in survivors))
    others = [m for m in survivors if m != identity]
    if others and framing.n == 1 and j % 2 == 1:
        report.note(
            f"anomaly: odd j = {j} admits the non-identity linear part(s) "
            + ", ".join(format_matrix(m) for m in others)
        )
        logger.warning(f"Odd-j framing anomaly at j={j}")
    else:
        report.check(not others, "non-identity linear parts survive at order j + 1")
    if expected_survivors is not None:
        report.check(
            len(survivors) == expected_survivors,
            f"{len(survivors)} linear parts survive, expected {expected_survivors}",
        )
    return report
