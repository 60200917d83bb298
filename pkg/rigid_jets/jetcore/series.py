from fractions import Fraction
from typing import Iterator, List, Union

from rigid_jets.exceptions import NonZeroConstantTerm
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.utils import parse_rational


def binomial_coefficients(delta: Union[Fraction, int, str], count: int) -> List[Fraction]:
    """
    The first `count` coefficients r_0, r_1, ... of (1+X)^(-delta):
    r_i = prod_{j<i} (-delta - j) / i!.
    """
    return list(_binomial_coefficients(parse_rational(delta), count))


def _binomial_coefficients(delta: Fraction, count: int) -> Iterator[Fraction]:
    coefficient = Fraction(1)
    for i in range(count):
        yield coefficient
        coefficient = coefficient * (-delta - i) / (i + 1)


def series_binomial(delta: Union[Fraction, int, str], u: TruncatedPoly) -> TruncatedPoly:
    """
    Degree-k truncation of (1+u)^(-delta).

    With delta = 1 this is the alternating geometric series 1 - u + u^2 - ...

    Raises:
        NonZeroConstantTerm: If u(0) != 0, where the series would not truncate
    """
    if not u.field.is_zero(u.constant_term):
        raise NonZeroConstantTerm("series_binomial needs an argument vanishing at the origin")
    result = TruncatedPoly.zero(u.variables, u.order, u.field)
    power = TruncatedPoly.constant(1, u.variables, u.order, u.field)
    for coefficient in _binomial_coefficients(parse_rational(delta), u.order + 1):
        if power.is_zero():
            break
        result = result + power.scale(coefficient)
        power = power * u
    return result
