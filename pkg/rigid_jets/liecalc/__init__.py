from rigid_jets.liecalc.adjoint import ad_exp
from rigid_jets.liecalc.algebra import LieAlgebraModel, bracket, build_sl_embedding
from rigid_jets.liecalc.degeneration import ShearDirections, lie_degeneration, select_shear_directions

__all__ = [
    "LieAlgebraModel",
    "ShearDirections",
    "ad_exp",
    "bracket",
    "build_sl_embedding",
    "lie_degeneration",
    "select_shear_directions",
]
