"""
Exact linear algebra over a ScalarField, delegated to sympy's DomainMatrix.
"""
from __future__ import annotations

from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from rigid_jets.constants import Matrix
from rigid_jets.exceptions import DimensionMismatch, SingularLinearPart
from rigid_jets.jetcore.scalars import ScalarField


def to_domain_matrix(field: ScalarField, rows: Sequence[Sequence[Any]], ncols: Optional[int] = None) -> DomainMatrix:
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    converted = [[field.to_domain(field.convert(v)) for v in row] for row in rows]
    return DomainMatrix(converted, (len(converted), width), field.domain)


def from_domain_matrix(field: ScalarField, matrix: DomainMatrix) -> Matrix:
    return [[field.from_domain(v) for v in row] for row in matrix.to_list()]


def identity(field: ScalarField, n: int) -> Matrix:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def determinant(field: ScalarField, rows: Matrix) -> Any:
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatch("Determinant needs a square matrix")
    if not rows:
        return field.one
    return field.from_domain(to_domain_matrix(field, rows).det())


def inverse(field: ScalarField, rows: Matrix) -> Matrix:
    """
    Exact inverse.

    Raises:
        SingularLinearPart: If the determinant is zero in the field
    """
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatch("Only square matrices can be inverted")
    try:
        return from_domain_matrix(field, to_domain_matrix(field, rows).inv())
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
        raise SingularLinearPart(f"Matrix is singular over {field.describe()}") from exc


def mat_mul(field: ScalarField, left: Matrix, right: Matrix) -> Matrix:
    if any(len(row) != len(right) for row in left):
        raise DimensionMismatch("Inner matrix dimensions differ")
    width = len(right[0]) if right else 0
    product = to_domain_matrix(field, left, len(right)) * to_domain_matrix(field, right, width)
    return from_domain_matrix(field, product)


def solve_affine(field: ScalarField, rows: Matrix, rhs: Sequence[Any], nunknowns: int) -> Tuple[Optional[List[Any]], List[List[Any]]]:
    """
    Solves rows · x = rhs exactly.

    Returns:
        (particular, basis): a particular solution (free unknowns set to zero), or
        None when the system is inconsistent, and a basis of the homogeneous
        solution space.
    """
    if len(rhs) != len(rows):
        raise DimensionMismatch("Right-hand side length must equal the number of equations")
    if not rows:
        basis = [[field.one if i == j else field.zero for i in range(nunknowns)] for j in range(nunknowns)]
        return [field.zero] * nunknowns, basis
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = to_domain_matrix(field, augmented, nunknowns + 1).rref()
    reduced_rows = from_domain_matrix(field, reduced)
    if nunknowns in pivots:
        particular = None
    else:
        particular = [field.zero] * nunknowns
        for row_index, column in enumerate(pivots):
            particular[column] = reduced_rows[row_index][nunknowns]
    pivot_set = set(pivots)
    basis = []
    for free in range(nunknowns):
        if free in pivot_set:
            continue
        vector = [field.zero] * nunknowns
        vector[free] = field.one
        for row_index, column in enumerate(pivots):
            if column < nunknowns:
                vector[column] = -reduced_rows[row_index][free]
        basis.append(vector)
    return particular, basis


def nullspace(field: ScalarField, rows: Matrix, nunknowns: int) -> List[List[Any]]:
    _, basis = solve_affine(field, rows, [field.zero] * len(rows), nunknowns)
    return basis
