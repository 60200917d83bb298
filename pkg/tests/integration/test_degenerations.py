import pytest

from rigid_jets.charts.degeneration import degenerate_family
from rigid_jets.charts.jets import conjugated_family
from rigid_jets.charts.specs import DegenerationScenario
from rigid_jets.constants import ChartKind
from rigid_jets.jetcore.limits import scalar_limit_at_zero
from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.numeric import jet_evaluate_numeric
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.serialization import deserialize_map
from rigid_jets.liecalc.algebra import build_sl_embedding
from rigid_jets.liecalc.degeneration import lie_degeneration, select_shear_directions

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2)])
def test_torus_limit_is_nontrivial_exactly_at_order_k(n, k):
    report = degenerate_family(DegenerationScenario(ChartKind.TORUS, n, k))
    assert report.passed, report.notes
    assert report.lowest_nontrivial_order == k
    assert report.top_coefficient == str((-1) ** (k - 1))


def test_torus_limit_jet():
    report = degenerate_family(DegenerationScenario(ChartKind.TORUS, 2, 2, ("1/3",)))
    assert report.passed, report.notes
    variables = ("xi1", "eta")
    xi = TruncatedPoly.variable(0, variables, 2)
    eta = TruncatedPoly.variable(1, variables, 2)
    assert deserialize_map(report.limit_jet) == TruncatedPolyMap([xi - eta * eta, eta])
    assert any(note.startswith("sign: derived coefficient -1") for note in report.notes)


def test_volume_limit_carries_the_binomial_coefficient():
    report = degenerate_family(DegenerationScenario(ChartKind.VOLUME, 2, 2))
    assert report.passed, report.notes
    assert report.lowest_nontrivial_order == 2
    assert report.top_coefficient == "-3/8"
    assert "r_2 = 3/8 for delta = 1/2" in report.notes


def test_volume_limit_in_three_dimensions():
    report = degenerate_family(DegenerationScenario(ChartKind.VOLUME, 3, 2))
    assert report.passed, report.notes
    assert report.top_coefficient == "-2/9"


def test_lie_limit():
    report = degenerate_family(DegenerationScenario(ChartKind.LIE, 8, 2))
    assert report.passed, report.notes
    assert report.lowest_nontrivial_order == 2
    assert report.params["small"] == 2
    assert any(note.startswith("linear terms: ") for note in report.notes)


def test_lie_complement_matches_the_torus_limit():
    model = build_sl_embedding(2, 3)
    report = lie_degeneration(model, select_shear_directions(model), 2, include_subalgebra=False)
    assert report.passed, report.notes
    assert report.params["include_subalgebra"] is False


SMALL_PARAMETER = 1e-6


@pytest.mark.parametrize("chart,n,k", [
    (ChartKind.TORUS, 2, 2),
    (ChartKind.TORUS, 2, 4),
    (ChartKind.TORUS, 3, 3),
    (ChartKind.VOLUME, 2, 3),
])
def test_limit_agrees_with_the_family_at_a_small_parameter(chart, n, k):
    scenario = DegenerationScenario(chart, n, k)
    spec = scenario.chart_spec()
    family = conjugated_family(spec, spec.field.gen ** scenario.substitution_exponent, list(scenario.base_x) + [None])
    limit = scalar_limit_at_zero(family)
    for point in ([0.3] * n, [-0.2] + [0.5] * (n - 1), [0.1 * (i + 1) for i in range(n)]):
        near = jet_evaluate_numeric(family, point, param=SMALL_PARAMETER)
        assert near == pytest.approx(jet_evaluate_numeric(limit, point), abs=1e-5)
