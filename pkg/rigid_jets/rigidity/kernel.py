"""
Kernel solves shared by the framing and generalized-connection checks.

A residual is any function from a candidate jet to a list of truncated polynomials.
Unknowns are coefficients added to a base jet, one (component, monomial) pair each;
the residual coefficients selected by `monomials` must be affine in them, which is
checked on every basis element after solving.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from rigid_jets.constants import MultiIndex
from rigid_jets.exceptions import UnresolvedSystem
from rigid_jets.jetcore import linalg
from rigid_jets.jetcore.maps import TruncatedPolyMap, jet_truncate
from rigid_jets.jetcore.polys import TruncatedPoly

logger = logging.getLogger(__name__)

Residual = Callable[[TruncatedPolyMap], Sequence[TruncatedPoly]]
Unknown = Tuple[int, MultiIndex]


@dataclass(frozen=True)
class KernelReport:
    """
    Solutions of a kernel solve at order `order`.

    `basis` spans the solutions as perturbations of the identity: each element is
    identity + (one basis vector of the solution space). `forced_triviality_order` is
    the largest m such that every solution truncates to the identity at order m.
    """

    order: int
    dimension: int
    basis: Tuple[TruncatedPolyMap, ...]
    forced_triviality_order: int


def perturb(base: TruncatedPolyMap, unknowns: Sequence[Unknown], values: Sequence[Any]) -> TruncatedPolyMap:
    components = list(base.components)
    for (component, exps), value in zip(unknowns, values):
        if value:
            term = TruncatedPoly(base.variables, base.order, {exps: value}, base.field)
            components[component] = components[component] + term
    return TruncatedPolyMap(components)


def residual_vector(residual: Sequence[TruncatedPoly], monomials: Sequence[MultiIndex]) -> List[Any]:
    return [poly.coefficient(exps) for poly in residual for exps in monomials]


def affine_system(
    base: TruncatedPolyMap,
    unknowns: Sequence[Unknown],
    residual: Residual,
    monomials: Sequence[MultiIndex],
) -> Tuple[List[List[Any]], List[Any]]:
    """
    Rows and right-hand side of residual(base + sum c_j e_j) = 0, restricted to the
    coefficients in `monomials`. Column j is residual(e_j) - residual(0).
    """
    field = base.field
    at_zero = residual_vector(residual(base), monomials)
    columns = []
    for j in range(len(unknowns)):
        unit = [field.one if i == j else field.zero for i in range(len(unknowns))]
        at_unit = residual_vector(residual(perturb(base, unknowns, unit)), monomials)
        columns.append([a - b for a, b in zip(at_unit, at_zero)])
    rows = [[column[r] for column in columns] for r in range(len(at_zero))]
    return rows, [-v for v in at_zero]


def vanishes_on(residual: Sequence[TruncatedPoly], monomials: Sequence[MultiIndex]) -> bool:
    return all(not poly.coefficient(exps) for poly in residual for exps in monomials)


def solve_kernel(
    base: TruncatedPolyMap,
    unknowns: Sequence[Unknown],
    residual: Residual,
    monomials: Sequence[MultiIndex],
    order: Optional[int] = None,
) -> KernelReport:
    """
    Solves residual(base + P) = 0 on `monomials` for P spanned by `unknowns`, where
    base is itself a solution (normally the identity).

    Raises:
        UnresolvedSystem: If base is not a solution, or a computed basis element fails
            the residual, which means the residual was not affine in the unknowns
    """
    field = base.field
    rows, rhs = affine_system(base, unknowns, residual, monomials)
    if any(v for v in rhs):
        raise UnresolvedSystem("The base jet does not solve the residual equations")
    basis = linalg.nullspace(field, rows, len(unknowns))
    solutions = tuple(perturb(base, unknowns, vector) for vector in basis)
    for solution in solutions:
        if not vanishes_on(residual(solution), monomials):
            raise UnresolvedSystem("A solution fails the residual; the system is not affine in the unknowns")
    order = order if order is not None else base.order
    logger.debug(f"Kernel at order {order}: {len(unknowns)} unknowns, dimension {len(solutions)}")
    return KernelReport(
        order=order,
        dimension=len(solutions),
        basis=solutions,
        forced_triviality_order=forced_triviality_order(solutions, order),
    )


def forced_triviality_order(solutions: Sequence[TruncatedPolyMap], order: int) -> int:
    lowest = [s.lowest_nontrivial_order() for s in solutions]
    nontrivial = [d for d in lowest if d is not None]
    if not nontrivial:
        return order
    return min(nontrivial) - 1


def truncates_to_identity(report: KernelReport, m: int) -> bool:
    return all(jet_truncate(s, m).is_identity() for s in report.basis)
