"""
Coverage manifest: each in-scope computation and the scenario kinds that exercise it.

`uncovered(specs)` audits a scenario list against the manifest; the built-in suite must
leave nothing uncovered.
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from rigid_jets.constants import ScenarioKind


@dataclass(frozen=True)
class Computation:
    name: str
    operation: str
    kinds: Tuple[ScenarioKind, ...]


DEGENERATIONS = (
    ScenarioKind.TORUS_DEGENERATION,
    ScenarioKind.VOLUME_DEGENERATION,
    ScenarioKind.LIE_DEGENERATION,
)

MANIFEST: Tuple[Computation, ...] = (
    Computation("blow-up chart and its centered jets", "charts.jets.centered_chart_jets", DEGENERATIONS + (ScenarioKind.ORACLE_CROSSCHECK,)),
    Computation("volume-preserving gluing chart", "charts.jets.centered_chart_jet", (ScenarioKind.VOLUME_DEGENERATION, ScenarioKind.ORACLE_CROSSCHECK)),
    Computation("conjugated family nu(b, p)", "charts.jets.conjugated_family", (ScenarioKind.TORUS_DEGENERATION, ScenarioKind.VOLUME_DEGENERATION, ScenarioKind.ORACLE_CROSSCHECK)),
    Computation("closed form b eta (y + eta)^-1", "charts.jets.verify_torus_closed_form", (ScenarioKind.TORUS_DEGENERATION,)),
    Computation("binomial series of (1+X)^-delta", "jetcore.series.series_binomial", (ScenarioKind.VOLUME_DEGENERATION,)),
    Computation("substitution b = y^k and limit at 0", "charts.degeneration.degenerate_family", DEGENERATIONS),
    Computation("invariant complement of sl_m in sl_N", "liecalc.algebra.build_sl_embedding", (ScenarioKind.LIE_DEGENERATION,)),
    Computation("root-vector selection of V and Y", "liecalc.degeneration.select_shear_directions", (ScenarioKind.LIE_DEGENERATION,)),
    Computation("Ad(exp(bV)) as a finite series", "liecalc.adjoint.ad_exp", (ScenarioKind.LIE_DEGENERATION,)),
    Computation("limit of the Lie family", "liecalc.degeneration.lie_degeneration", (ScenarioKind.LIE_DEGENERATION,)),
    Computation("framing residual a_k^l - a_k^m conditions", "rigidity.framing.framing_residual", (ScenarioKind.FRAMING_KERNEL,)),
    Computation("wedge vanishing order", "rigidity.framing.wedge_vanishing_order", (ScenarioKind.FRAMING_KERNEL,)),
    Computation("kernel of the truncation at order l", "rigidity.framing.framing_kernel_top_order", (ScenarioKind.FRAMING_KERNEL,)),
    Computation("linear-part candidate search", "rigidity.framing.framing_linear_part_search", (ScenarioKind.FRAMING_KERNEL,)),
    Computation("stabilizer of the blow-down 2-jet", "rigidity.genconn.gl_stabilizer", (ScenarioKind.GL_STABILIZER,)),
    Computation("isometry jets of the generalized connection", "rigidity.genconn.genconn_is_isometry_jet", (ScenarioKind.GENCONN_RIGIDITY,)),
    Computation("(1,2)-rigidity equations F^n = y", "rigidity.genconn.genconn_rigidity_check", (ScenarioKind.GENCONN_RIGIDITY,)),
    Computation("numeric Taylor oracle", "charts.oracle.numeric_jet_oracle", (ScenarioKind.ORACLE_CROSSCHECK,)),
)


def uncovered(kinds: Iterable[ScenarioKind]) -> List[Computation]:
    present = set(kinds)
    return [c for c in MANIFEST if not present.intersection(c.kinds)]
