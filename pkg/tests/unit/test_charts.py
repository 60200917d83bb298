from fractions import Fraction

import pytest

from rigid_jets.charts.degeneration import derived_top_coefficient, printed_top_coefficient
from rigid_jets.charts.jets import (
    centered_chart_jet,
    centered_chart_jets,
    conjugate_through_chart,
    conjugated_family,
    shear_jet,
    torus_closed_form,
    verify_torus_closed_form,
)
from rigid_jets.charts.specs import (
    DegenerationScenario,
    ShearSpec,
    TorusChartSpec,
    VolumeChartSpec,
    chart_variables,
)
from rigid_jets.constants import ChartKind
from rigid_jets.exceptions import DimensionMismatch, InvalidModel, NonZeroConstantTerm, OrderMismatch, SingularLinearPart
from rigid_jets.jetcore.maps import CenteredJet, TruncatedPolyMap, jet_compose
from rigid_jets.jetcore.polys import TruncatedPoly


def test_chart_variables():
    assert chart_variables(2) == ("xi1", "eta")
    assert chart_variables(4) == ("xi1", "xi2", "xi3", "eta")


def test_torus_chart_jet_at_symbolic_point():
    spec = TorusChartSpec(2, 2)
    jet = centered_chart_jet(spec, ["1/2", None])
    y = spec.field.gen
    xi = TruncatedPoly.variable(0, spec.variables, 2, spec.field)
    eta = TruncatedPoly.variable(1, spec.variables, 2, spec.field)
    assert jet.map == TruncatedPolyMap([xi.scale(y) + eta.scale(Fraction(1, 2)) + xi * eta, eta])
    assert jet.base_point == (spec.field.convert(Fraction(1, 2)), y)


def test_torus_chart_inverse():
    spec = TorusChartSpec(2, 2)
    _, inverse = centered_chart_jets(spec)
    y = spec.field.gen
    zeta = TruncatedPoly.variable(0, spec.variables, 2, spec.field)
    eta = TruncatedPoly.variable(1, spec.variables, 2, spec.field)
    assert inverse.map == TruncatedPolyMap([zeta.scale(1 / y) - (zeta * eta).scale(1 / y ** 2), eta])


def test_chart_on_the_divisor_is_singular():
    with pytest.raises(SingularLinearPart):
        centered_chart_jets(TorusChartSpec(2, 2), [0, 0])


def test_volume_chart_linear_part():
    spec = VolumeChartSpec(2, 2)
    jet = centered_chart_jet(spec)
    s = spec.field.gen
    assert jet.map[1].coefficient((0, 1)) == 1 / (2 * s)
    assert jet.map[1].coefficient((0, 2)) == -1 / (8 * s ** 3)


def test_conjugated_family_matches_series():
    spec = TorusChartSpec(2, 3)
    y = spec.field.gen
    nu = conjugated_family(spec, 2)
    eta = TruncatedPoly.variable(1, spec.variables, 3, spec.field)
    xi = TruncatedPoly.variable(0, spec.variables, 3, spec.field)
    expected = xi + eta.scale(2 / y) - (eta ** 2).scale(2 / y ** 2) + (eta ** 3).scale(2 / y ** 3)
    assert nu == TruncatedPolyMap([expected, eta])


def test_conjugated_family_at_zero_is_identity():
    assert conjugated_family(VolumeChartSpec(3, 2), 0).is_identity()


@pytest.mark.parametrize("n,k", [(2, 2), (2, 4), (3, 3)])
def test_torus_closed_form(n, k):
    assert verify_torus_closed_form(TorusChartSpec(n, k))
    assert verify_torus_closed_form(TorusChartSpec(n, k), ["2/3"] * (n - 1))


def test_closed_form_first_component_only():
    spec = TorusChartSpec(3, 2)
    closed = torus_closed_form(spec, 5)
    assert closed[1] == TruncatedPoly.variable(1, spec.variables, 2, spec.field)
    assert closed[2] == TruncatedPoly.variable(2, spec.variables, 2, spec.field)


def test_shear_is_a_one_parameter_group():
    first = shear_jet(ShearSpec(Fraction(2, 3)), 3, 3)
    second = shear_jet(ShearSpec(Fraction(-1, 2)), 3, 3)
    assert jet_compose(first, second) == shear_jet(ShearSpec(Fraction(1, 6)), 3, 3)
    assert shear_jet(ShearSpec(0), 3, 3).is_identity()


def test_shear_indices():
    with pytest.raises(DimensionMismatch):
        shear_jet(ShearSpec(1, source=0, target=0), 2, 2)
    with pytest.raises(DimensionMismatch):
        shear_jet(ShearSpec(1, target=5), 2, 2)


def test_conjugating_the_identity():
    spec = TorusChartSpec(2, 3)
    chart, inverse = centered_chart_jets(spec)
    identity = TruncatedPolyMap.identity(spec.variables, 3, spec.field)
    assert conjugate_through_chart(chart, identity, inverse.map).is_identity()


def test_centered_jet_rejects_moving_maps():
    moved = TruncatedPolyMap([TruncatedPoly(("x",), 2, {(0,): 1, (1,): 1})])
    with pytest.raises(NonZeroConstantTerm):
        CenteredJet((0,), moved)


def test_chart_spec_validation():
    with pytest.raises(DimensionMismatch):
        TorusChartSpec(1, 2)
    with pytest.raises(OrderMismatch):
        VolumeChartSpec(2, 1)


def test_degeneration_scenario_defaults_and_checks():
    scenario = DegenerationScenario(ChartKind.TORUS, 3, 2)
    assert scenario.base_x == (0, 0)
    assert DegenerationScenario(ChartKind.VOLUME, 2, 3).substitution_exponent == 6
    with pytest.raises(DimensionMismatch):
        DegenerationScenario(ChartKind.TORUS, 3, 2, base_x=("1",))
    with pytest.raises(InvalidModel):
        DegenerationScenario(ChartKind.LIE, 8, 2, small=3, big=3)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_derived_torus_coefficient_has_opposite_sign(k):
    assert derived_top_coefficient(ChartKind.TORUS, 2, k) == (-1) ** (k - 1)
    assert printed_top_coefficient(ChartKind.TORUS, 2, k) == -derived_top_coefficient(ChartKind.TORUS, 2, k)


def test_derived_volume_coefficient():
    assert derived_top_coefficient(ChartKind.VOLUME, 2, 2) == Fraction(-3, 8)
    assert derived_top_coefficient(ChartKind.VOLUME, 3, 2) == Fraction(-2, 9)
