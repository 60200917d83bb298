from rigid_jets.rigidity.framing import (
    FramingSpec,
    framing_kernel_top_order,
    framing_linear_part_search,
    framing_residual,
    wedge_vanishing_order,
)
from rigid_jets.rigidity.genconn import (
    GeneralizedConnectionSpec,
    genconn_is_isometry_jet,
    genconn_rigidity_check,
    gl_stabilizer,
)
from rigid_jets.rigidity.kernel import KernelReport

__all__ = [
    "FramingSpec",
    "GeneralizedConnectionSpec",
    "KernelReport",
    "framing_kernel_top_order",
    "framing_linear_part_search",
    "framing_residual",
    "genconn_is_isometry_jet",
    "genconn_rigidity_check",
    "gl_stabilizer",
    "wedge_vanishing_order",
]
