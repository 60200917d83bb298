from rigid_jets.charts.degeneration import degenerate_family
from rigid_jets.charts.jets import centered_chart_jets, conjugate_through_chart, shear_jet
from rigid_jets.charts.oracle import numeric_jet_oracle
from rigid_jets.charts.specs import DegenerationScenario, ShearSpec, TorusChartSpec, VolumeChartSpec

__all__ = [
    "DegenerationScenario",
    "ShearSpec",
    "TorusChartSpec",
    "VolumeChartSpec",
    "centered_chart_jets",
    "conjugate_through_chart",
    "degenerate_family",
    "numeric_jet_oracle",
    "shear_jet",
]
