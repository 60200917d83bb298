import pytest

from rigid_jets.exceptions import DimensionMismatch, ParameterRequired
from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.numeric import jet_evaluate_numeric
from rigid_jets.jetcore.polys import TruncatedPoly


def test_evaluate_identity():
    identity = TruncatedPolyMap.identity(("u", "v"), 2)
    assert jet_evaluate_numeric(identity, [0.5, 0.25]) == pytest.approx([0.5, 0.25])


def test_evaluate_square():
    x = TruncatedPoly.variable(0, ("x",), 2)
    assert jet_evaluate_numeric(TruncatedPolyMap([x * x]), [3.0]) == pytest.approx([9.0])


def test_evaluate_parametric(qq_y):
    variables = ("xi", "eta")
    xi = TruncatedPoly.variable(0, variables, 2, qq_y)
    eta = TruncatedPoly.variable(1, variables, 2, qq_y)
    f = TruncatedPolyMap([xi + (xi * eta).scale(1 / qq_y.gen), eta])
    assert jet_evaluate_numeric(f, [1.0, 1.0], param=0.5) == pytest.approx([3.0, 1.0])
    with pytest.raises(ParameterRequired):
        jet_evaluate_numeric(f, [1.0, 1.0])


def test_evaluate_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        jet_evaluate_numeric(TruncatedPolyMap.identity(("u", "v"), 1), [1.0])
