from fractions import Fraction

import numpy as np
import pytest

from rigid_jets.charts.jets import centered_chart_jet
from rigid_jets.charts.oracle import identity_evaluator, numeric_jet_oracle, oracle_crosscheck, torus_chart_evaluator
from rigid_jets.charts.specs import TorusChartSpec
from rigid_jets.constants import OracleTarget
from rigid_jets.exceptions import OracleFailure, OrderMismatch


def test_identity_jet(jets_settings):
    jet = numeric_jet_oracle(identity_evaluator, [0.5, -0.25], 2)
    assert jet.coefficient(0, (1, 0)) == pytest.approx(1.0)
    assert abs(jet.coefficient(0, (0, 1))) < 1e-9
    assert abs(jet.coefficient(1, (2, 0))) < 1e-9


def test_torus_chart_agrees_with_exact_jet(jets_settings):
    exact = centered_chart_jet(TorusChartSpec(2, 2), ["1/2", "3/4"]).map
    numeric = numeric_jet_oracle(torus_chart_evaluator, [0.5, 0.75], 2, exact.variables)
    assert numeric.agrees_with(exact)
    assert numeric.coefficient(0, (1, 1)) == pytest.approx(1.0)


def test_non_finite_evaluator(jets_settings):
    def blows_up(coords):
        return [np.full(coords[0].shape, np.inf)]

    with pytest.raises(OracleFailure):
        numeric_jet_oracle(blows_up, [0.5], 2)


def test_grid_must_resolve_the_order(jets_settings):
    with pytest.raises(OrderMismatch):
        numeric_jet_oracle(identity_evaluator, [0.5], 3, grid=3)


@pytest.mark.parametrize("target,n,k", [
    (OracleTarget.TORUS_CHART, 2, 3),
    (OracleTarget.TORUS_CHART, 3, 2),
    (OracleTarget.CONJUGATE, 2, 3),
    (OracleTarget.VOLUME_CHART, 2, 2),
])
def test_crosscheck_passes(jets_settings, target, n, k):
    report = oracle_crosscheck(target, n, k, points=2, seed=7, b=Fraction(1, 2))
    assert report.passed, report.notes
    assert report.params["points"] == 2


def test_crosscheck_is_seeded(jets_settings):
    first = oracle_crosscheck(OracleTarget.TORUS_CHART, 2, 2, points=1, seed=3)
    second = oracle_crosscheck(OracleTarget.TORUS_CHART, 2, 2, points=1, seed=3)
    assert first.to_payload() == second.to_payload()
