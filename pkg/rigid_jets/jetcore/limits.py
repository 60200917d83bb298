from typing import Any, Union

from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD, field_of


def scalar_limit_at_zero(value: Union[Any, TruncatedPoly, TruncatedPolyMap]):
    """
    Substitutes 0 for the limit parameter.

    Bare scalars, polynomials and maps are all accepted; polynomials and maps are
    handled coefficient-wise and come back over the rationals. Parameter-free values
    are returned unchanged.

    Raises:
        PoleAtZero: If any coefficient has a pole at zero, so the limit jet does not exist
    """
    if isinstance(value, TruncatedPolyMap):
        return TruncatedPolyMap([scalar_limit_at_zero(c) for c in value])
    if isinstance(value, TruncatedPoly):
        if not value.field.is_parametric:
            return value
        return value.map_coefficients(value.field.limit_at_zero, QQ_FIELD)
    return field_of(value).limit_at_zero(value)
