from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from rigid_jets.constants import Matrix, MultiIndex
from rigid_jets.exceptions import (
    DimensionMismatch,
    FieldMismatch,
    NonZeroConstantTerm,
    OrderMismatch,
    VariableMismatch,
)
from rigid_jets.jetcore import linalg
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD, ScalarField
from rigid_jets.utils import all_equal, unit_index

logger = logging.getLogger(__name__)


class TruncatedPolyMap:
    """
    A polynomial map R^n -> R^m of degree <= k, one TruncatedPoly per target coordinate.

    When the constant term is zero and the linear part is invertible the map is an
    element of the jet group D^k under `jet_compose`.
    """

    __slots__ = ("components",)

    def __init__(self, components: Sequence[TruncatedPoly]):
        if not components:
            raise DimensionMismatch("A polynomial map needs at least one component")
        if not all_equal(c.variables for c in components):
            raise VariableMismatch("All components must share one variable list")
        if not all_equal(c.order for c in components):
            raise OrderMismatch("All components must share one truncation order")
        if not all_equal(c.field for c in components):
            raise FieldMismatch("All components must share one scalar field")
        self.components: Tuple[TruncatedPoly, ...] = tuple(components)

    @classmethod
    def identity(cls, variables: Sequence[str], order: int, field: ScalarField = QQ_FIELD) -> "TruncatedPolyMap":
        return cls([TruncatedPoly.variable(i, variables, order, field) for i in range(len(variables))])

    @classmethod
    def linear(cls, matrix: Matrix, variables: Sequence[str], order: int, field: ScalarField = QQ_FIELD) -> "TruncatedPolyMap":
        n = len(variables)
        components = []
        for row in matrix:
            if len(row) != n:
                raise DimensionMismatch(f"Matrix row of length {len(row)} for {n} variables")
            components.append(TruncatedPoly(variables, order, {unit_index(n, j): v for j, v in enumerate(row)}, field))
        return cls(components)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.components[0].variables

    @property
    def order(self) -> int:
        return self.components[0].order

    @property
    def field(self) -> ScalarField:
        return self.components[0].field

    @property
    def source_dim(self) -> int:
        return len(self.variables)

    @property
    def target_dim(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[TruncatedPoly]:
        return iter(self.components)

    def __getitem__(self, index: int) -> TruncatedPoly:
        return self.components[index]

    def linear_part(self) -> Matrix:
        n = self.source_dim
        return [[c.coefficient(unit_index(n, j)) for j in range(n)] for c in self.components]

    def constant_terms(self) -> List[Any]:
        return [c.constant_term for c in self.components]

    def has_zero_constant_term(self) -> bool:
        return all(self.field.is_zero(v) for v in self.constant_terms())

    def is_jet_group_element(self) -> bool:
        if self.source_dim != self.target_dim or not self.has_zero_constant_term():
            return False
        return not self.field.is_zero(linalg.determinant(self.field, self.linear_part()))

    def homogeneous_part(self, degree: int) -> "TruncatedPolyMap":
        return TruncatedPolyMap([c.homogeneous_part(degree) for c in self.components])

    def truncate(self, order: int) -> "TruncatedPolyMap":
        return TruncatedPolyMap([c.truncate(order) for c in self.components])

    def lift(self, order: int) -> "TruncatedPolyMap":
        return TruncatedPolyMap([c.lift(order) for c in self.components])

    def over(self, field: ScalarField) -> "TruncatedPolyMap":
        return TruncatedPolyMap([c.over(field) for c in self.components])

    def map_coefficients(self, func: Callable[[Any], Any], field: ScalarField) -> "TruncatedPolyMap":
        return TruncatedPolyMap([c.map_coefficients(func, field) for c in self.components])

    def jacobian(self) -> List[List[TruncatedPoly]]:
        return [[c.derivative(j) for j in range(self.source_dim)] for c in self.components]

    def difference_from_identity(self) -> "TruncatedPolyMap":
        if self.source_dim != self.target_dim:
            raise DimensionMismatch("Only square maps can be compared with the identity")
        return self - TruncatedPolyMap.identity(self.variables, self.order, self.field)

    def lowest_nontrivial_order(self) -> Optional[int]:
        """
        Smallest degree at which the map differs from the identity, or None if it is
        the identity jet.
        """
        degrees = [d for d in (c.lowest_degree() for c in self.difference_from_identity()) if d is not None]
        return min(degrees) if degrees else None

    def is_identity(self) -> bool:
        return self.lowest_nontrivial_order() is None

    def __add__(self, other: "TruncatedPolyMap") -> "TruncatedPolyMap":
        if len(other) != len(self):
            raise DimensionMismatch("Maps have different target dimensions")
        return TruncatedPolyMap([a + b for a, b in zip(self, other)])

    def __sub__(self, other: "TruncatedPolyMap") -> "TruncatedPolyMap":
        if len(other) != len(self):
            raise DimensionMismatch("Maps have different target dimensions")
        return TruncatedPolyMap([a - b for a, b in zip(self, other)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolyMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.components)
        return f"TruncatedPolyMap(({body}), vars={self.variables}, order={self.order})"


@dataclass(frozen=True)
class CenteredJet:
    """
    A jet written in offset coordinates about `base_point`: offsets of the base point
    go to offsets of its image, so the map has zero constant term.
    """

    base_point: Tuple[Any, ...]
    map: TruncatedPolyMap

    def __post_init__(self):
        if not self.map.has_zero_constant_term():
            raise NonZeroConstantTerm("A centered jet must send the zero offset to zero")
        if len(self.base_point) != self.map.source_dim:
            raise DimensionMismatch("Base point and jet source dimension differ")


def apply_linear(matrix: Matrix, target: TruncatedPolyMap) -> TruncatedPolyMap:
    """
    Postcomposes `target` with a constant matrix: component i is sum_j M[i][j] * target_j.
    """
    if any(len(row) != len(target) for row in matrix):
        raise DimensionMismatch("Matrix width must equal the map's target dimension")
    field = target.field
    components = []
    for row in matrix:
        acc = TruncatedPoly.zero(target.variables, target.order, field)
        for coef, comp in zip(row, target):
            if not field.is_zero(field.convert(coef)):
                acc = acc + comp.scale(coef)
        components.append(acc)
    return TruncatedPolyMap(components)


def jet_compose(f: TruncatedPolyMap, g: TruncatedPolyMap) -> TruncatedPolyMap:
    """
    Degree-k truncation of f o g.

    The inner map must fix the base point (zero constant term); that is exactly when
    truncating after composing agrees with composing the truncations.

    Raises:
        NonZeroConstantTerm: If g moves the base point
        DimensionMismatch: If f's source dimension differs from g's target dimension
        OrderMismatch, FieldMismatch: If the orders or scalar fields differ
    """
    if f.order != g.order:
        raise OrderMismatch(f"Cannot compose jets of orders {f.order} and {g.order}")
    if f.source_dim != g.target_dim:
        raise DimensionMismatch(
            f"Outer map expects {f.source_dim} inputs, inner map has {g.target_dim} outputs"
        )
    if f.field != g.field:
        raise FieldMismatch(f"Cannot compose over {f.field.describe()} and {g.field.describe()}")
    if not g.has_zero_constant_term():
        raise NonZeroConstantTerm("Inner map of a jet composition must fix the base point")

    field = g.field
    powers: Dict[MultiIndex, TruncatedPoly] = {
        tuple(0 for _ in range(g.target_dim)): TruncatedPoly.constant(1, g.variables, g.order, field)
    }

    def power(exps: MultiIndex) -> TruncatedPoly:
        cached = powers.get(exps)
        if cached is not None:
            return cached
        last = max(i for i, e in enumerate(exps) if e)
        lower = exps[:last] + (exps[last] - 1,) + exps[last + 1:]
        result = power(lower) * g[last]
        powers[exps] = result
        return result

    components = []
    for comp in f:
        acc = TruncatedPoly.zero(g.variables, g.order, field)
        for exps, coef in comp.sorted_terms():
            acc = acc + power(exps).scale(coef)
        components.append(acc)
    return TruncatedPolyMap(components)


def jet_invert(f: TruncatedPolyMap) -> TruncatedPolyMap:
    """
    Inverse in D^k, solved order by order: the linear part by exact matrix inversion,
    then each degree d by cancelling the degree-d defect of f o g.

    Raises:
        DimensionMismatch: If f is not square
        NonZeroConstantTerm: If f moves the base point
        SingularLinearPart: If the linear part is not invertible over the field
    """
    if f.source_dim != f.target_dim:
        raise DimensionMismatch("Only square maps can be inverted")
    if not f.has_zero_constant_term():
        raise NonZeroConstantTerm("Only base-point preserving jets can be inverted")
    linear_inverse = linalg.inverse(f.field, f.linear_part())
    inverse = TruncatedPolyMap.linear(linear_inverse, f.variables, f.order, f.field)
    for degree in range(2, f.order + 1):
        defect = jet_compose(f, inverse).homogeneous_part(degree)
        if all(c.is_zero() for c in defect):
            continue
        logger.debug(f"jet_invert: correcting degree {degree}")
        inverse = inverse - apply_linear(linear_inverse, defect)
    return inverse


def jet_truncate(f: TruncatedPolyMap, m: int) -> TruncatedPolyMap:
    """
    The projection D^l -> D^m: drops every term of total degree above m.
    """
    if m < 1:
        raise OrderMismatch(f"Truncation order must be at least 1, got {m}")
    if m > f.order:
        raise OrderMismatch(f"Cannot truncate an order-{f.order} jet to order {m}")
    return f.truncate(m)
