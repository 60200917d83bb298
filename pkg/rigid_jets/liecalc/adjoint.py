"""
Ad(exp(bV)) as the finite series sum_i b^i ad_V^i / i! and its exact identities.

Identities in b are checked over the polynomial rings QQ[b] and QQ[b1, b2], so each
one holds for every value of the parameter, not just for samples.
"""
from typing import Any, List

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from rigid_jets.constants import Matrix
from rigid_jets.exceptions import InvalidModel
from rigid_jets.jetcore.linalg import from_domain_matrix, to_domain_matrix
from rigid_jets.jetcore.scalars import QQ_FIELD, ScalarField
from rigid_jets.liecalc.algebra import LieAlgebraModel


def _rational_matrix(rows: Matrix) -> DomainMatrix:
    return to_domain_matrix(QQ_FIELD, rows)


def nilpotency_degree(ad: Matrix) -> int:
    """
    Smallest d with ad^d = 0.

    Raises:
        InvalidModel: If the matrix is not nilpotent
    """
    matrix = _rational_matrix(ad)
    power = matrix
    for degree in range(1, len(ad) + 1):
        if power.is_zero_matrix:
            return degree
        power = power * matrix
    raise InvalidModel("ad_V is not nilpotent; V must be a root vector")


def exp_series(ad: Matrix, b: Any, domain) -> DomainMatrix:
    """
    sum_{i < d} b^i ad^i / i! over `domain`, d the nilpotency degree of `ad`.
    """
    degree = nilpotency_degree(ad)
    step = _rational_matrix(ad).convert_to(domain)
    term = DomainMatrix.eye(len(ad), domain)
    total = term
    for i in range(1, degree):
        term = (term * step) * (b * domain.convert(QQ(1, i), QQ))
        total = total + term
    return total


def ad_exp(model: LieAlgebraModel, element: Matrix, b: Any, field: ScalarField = QQ_FIELD) -> Matrix:
    """
    Matrix of Ad(exp(bV)) in the model basis, entries in `field`.

    Raises:
        InvalidModel: If ad_V is not nilpotent
    """
    value = field.to_domain(field.convert(b))
    return from_domain_matrix(field, exp_series(model.ad_matrix(element), value, field.domain))


def check_group_law(model: LieAlgebraModel, element: Matrix) -> bool:
    """
    Ad(exp(b1 V)) Ad(exp(b2 V)) = Ad(exp((b1 + b2) V)) as polynomials in b1, b2.
    """
    ring = QQ.poly_ring(Symbol("b1"), Symbol("b2"))
    b1, b2 = ring.gens
    ad = model.ad_matrix(element)
    product = exp_series(ad, b1, ring) * exp_series(ad, b2, ring)
    return product.to_list() == exp_series(ad, b1 + b2, ring).to_list()


def check_killing_invariance(model: LieAlgebraModel, element: Matrix) -> bool:
    """
    Ad(exp(bV))^T K Ad(exp(bV)) = K for the Killing Gram matrix K, as polynomials in b.
    """
    ring = QQ.poly_ring(Symbol("b"))
    exp = exp_series(model.ad_matrix(element), ring.gens[0], ring)
    gram = _rational_matrix(model.killing_gram()).convert_to(ring)
    return (exp.transpose() * gram * exp).to_list() == gram.to_list()


def check_unimodular(model: LieAlgebraModel, element: Matrix) -> bool:
    ring = QQ.poly_ring(Symbol("b"))
    return exp_series(model.ad_matrix(element), ring.gens[0], ring).det() == ring.one


def check_complement_preserved(model: LieAlgebraModel, element: Matrix) -> bool:
    """
    For V in the subalgebra, Ad(exp(bV)) has no component from the complement into
    the subalgebra, for every b.
    """
    ring = QQ.poly_ring(Symbol("b"))
    rows = exp_series(model.ad_matrix(element), ring.gens[0], ring).to_list()
    return all(not rows[g][c] for g in model.subalgebra for c in model.complement)


def permuted(matrix: Matrix, order: List[int]) -> Matrix:
    """
    The same linear map written in the basis reordered as `order`.
    """
    return [[matrix[i][j] for j in order] for i in order]
