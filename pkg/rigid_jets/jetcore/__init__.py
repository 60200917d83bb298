from rigid_jets.jetcore.limits import scalar_limit_at_zero
from rigid_jets.jetcore.maps import CenteredJet, TruncatedPolyMap, jet_compose, jet_invert, jet_truncate
from rigid_jets.jetcore.numeric import NumericJet, jet_evaluate_numeric
from rigid_jets.jetcore.polys import TruncatedPoly, poly_ring_ops
from rigid_jets.jetcore.scalars import QQ_FIELD, RationalField, RationalFunctionField, ScalarField
from rigid_jets.jetcore.series import binomial_coefficients, series_binomial

__all__ = [
    "QQ_FIELD",
    "CenteredJet",
    "NumericJet",
    "RationalField",
    "RationalFunctionField",
    "ScalarField",
    "TruncatedPoly",
    "TruncatedPolyMap",
    "binomial_coefficients",
    "jet_compose",
    "jet_evaluate_numeric",
    "jet_invert",
    "jet_truncate",
    "poly_ring_ops",
    "scalar_limit_at_zero",
    "series_binomial",
]
