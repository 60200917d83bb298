from fractions import Fraction

import pytest

from rigid_jets.constants import RingOp
from rigid_jets.exceptions import FieldMismatch, OrderMismatch, VariableMismatch
from rigid_jets.jetcore.polys import TruncatedPoly, poly_ring_ops


def _xy(order):
    x = TruncatedPoly.variable(0, ("x", "y"), order)
    y = TruncatedPoly.variable(1, ("x", "y"), order)
    return x, y


def test_mul_difference_of_squares():
    x, y = _xy(2)
    assert poly_ring_ops(x + y, x - y, RingOp.MUL) == x * x - y * y


def test_add_zero_is_identity(rng):
    terms = {(i, j): Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for i in range(3) for j in range(3 - i)}
    p = TruncatedPoly(("x", "y"), 2, terms)
    assert poly_ring_ops(p, TruncatedPoly.zero(("x", "y"), 2), RingOp.ADD) == p


def test_mul_truncates_above_order():
    x = TruncatedPoly.variable(0, ("x",), 2)
    assert (x * (x * x)).is_zero()


def test_scale_and_sub():
    x, y = _xy(3)
    assert poly_ring_ops(x, Fraction(1, 2), RingOp.SCALE).coefficient((1, 0)) == Fraction(1, 2)
    assert poly_ring_ops(x, x, RingOp.SUB).is_zero()


def test_incompatible_operands():
    x, _ = _xy(2)
    with pytest.raises(VariableMismatch):
        x + TruncatedPoly.variable(0, ("u", "v"), 2)
    with pytest.raises(OrderMismatch):
        x + TruncatedPoly.variable(0, ("x", "y"), 3)


def test_field_mismatch(qq_y):
    x = TruncatedPoly.variable(0, ("x",), 2)
    with pytest.raises(FieldMismatch):
        x + TruncatedPoly.variable(0, ("x",), 2, qq_y)


def test_shift_reexpands_about_a_point():
    x, y = _xy(3)
    p = x * x * y
    shifted = p.shift([1, 2])
    # (1 + x)^2 (2 + y)
    assert shifted.constant_term == 2
    assert shifted.coefficient((1, 0)) == 4
    assert shifted.coefficient((0, 1)) == 1
    assert shifted.coefficient((2, 1)) == 1


def test_derivative_and_degrees():
    x, y = _xy(3)
    p = x * x * y + y
    assert p.derivative(0) == (x * y).scale(2)
    assert p.lowest_degree() == 1
    assert p.degree() == 3
    assert TruncatedPoly.zero(("x",), 2).lowest_degree() is None
