from fractions import Fraction
from math import comb

import pytest

from rigid_jets.constants import GLSide
from rigid_jets.exceptions import DimensionMismatch, InvalidModel, OrderMismatch, UnresolvedSystem
from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.rigidity.genconn import (
    GeneralizedConnectionSpec,
    conjugated_affine_jet,
    expected_genconn_dimension,
    genconn_is_isometry_jet,
    genconn_rigidity_check,
    gl_stabilizer,
    verify_gl_stabilizer,
)

POINT = [Fraction(1, 2), Fraction(1)]


def test_blow_down_jet_at_the_origin():
    jet = GeneralizedConnectionSpec(2).blow_down_jet()
    xi = TruncatedPoly.variable(0, ("xi1", "eta"), 2)
    eta = TruncatedPoly.variable(1, ("xi1", "eta"), 2)
    assert jet == TruncatedPolyMap([xi * eta, eta])


def test_blow_down_needs_rational_points():
    with pytest.raises(InvalidModel):
        GeneralizedConnectionSpec(2).blow_down_jet([0, None])
    with pytest.raises(DimensionMismatch):
        GeneralizedConnectionSpec(1)


@pytest.mark.parametrize("side", [GLSide.RIGHT, GLSide.LEFT])
@pytest.mark.parametrize("n", [2, 3])
def test_stabilizer_is_trivial(n, side):
    jet = GeneralizedConnectionSpec(n).blow_down_jet()
    identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    assert gl_stabilizer(jet, side) == [identity]


def test_stabilizer_of_a_one_dimensional_jet():
    jet = TruncatedPolyMap([TruncatedPoly(("x",), 2, {(1,): 1, (2,): 1})])
    assert gl_stabilizer(jet) == [[[Fraction(1)]]]


def test_stabilizer_of_a_linear_jet_is_infinite():
    with pytest.raises(UnresolvedSystem):
        gl_stabilizer(TruncatedPolyMap([TruncatedPoly.zero(("x",), 2)]))


def test_stabilizer_needs_a_square_jet():
    with pytest.raises(DimensionMismatch):
        gl_stabilizer(TruncatedPolyMap([TruncatedPoly.variable(0, ("u", "v"), 2)]))


def test_verify_gl_stabilizer_reports_both_sides():
    report = verify_gl_stabilizer(2)
    assert report.passed, report.notes
    assert report.notes == ["right stabilizer: [[1, 0], [0, 1]]", "left stabilizer: [[1, 0], [0, 1]]"]


def test_lifted_identity_is_the_identity():
    spec = GeneralizedConnectionSpec(2)
    h, image = conjugated_affine_jet(spec, POINT, [[1, 0], [0, 1]])
    assert h.is_identity()
    assert image == POINT


def test_lifted_affine_maps_are_isometries():
    spec = GeneralizedConnectionSpec(2)
    h, image = conjugated_affine_jet(spec, POINT, [[2, 1], [0, 3]], ["1/3", "1/5"])
    assert genconn_is_isometry_jet(spec, h, POINT, image)


def test_quadratic_perturbation_is_not_an_isometry():
    spec = GeneralizedConnectionSpec(2)
    identity = TruncatedPolyMap.identity(spec.variables, 2)
    bump = TruncatedPoly(spec.variables, 2, {(2, 0): 1})
    perturbed = TruncatedPolyMap([identity[0] + bump, identity[1]])
    assert not genconn_is_isometry_jet(spec, perturbed, POINT)


def test_isometry_checks_stay_off_the_divisor():
    spec = GeneralizedConnectionSpec(2)
    with pytest.raises(InvalidModel):
        genconn_is_isometry_jet(spec, TruncatedPolyMap.identity(spec.variables, 2), [0, 0])
    with pytest.raises(OrderMismatch):
        genconn_is_isometry_jet(spec, TruncatedPolyMap.identity(spec.variables, 1), POINT)


def test_rigidity_kernel_in_the_plane():
    kernel = genconn_rigidity_check(2)
    assert kernel.dimension == expected_genconn_dimension(2) == 4
    assert kernel.forced_triviality_order == 2
    assert all(s.difference_from_identity()[1].is_zero() for s in kernel.basis)


def test_expected_dimensions():
    assert [expected_genconn_dimension(n) for n in (2, 3, 4)] == [4, 20, 60]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_expected_dimension_formula(n):
    assert expected_genconn_dimension(n) == (n - 1) * comb(n + 2, 3)


@pytest.mark.slow
def test_rigidity_kernel_in_three_dimensions():
    kernel = genconn_rigidity_check(3)
    assert kernel.dimension == 2 * comb(5, 3)
    assert kernel.forced_triviality_order == 2
