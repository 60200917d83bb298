import pytest

from rigid_jets.runner import run_scenario, run_suite
from rigid_jets.scenarios import builtin_payloads, builtin_suite, load_spec

pytestmark = pytest.mark.slow


@pytest.mark.parametrize(
    "payload",
    builtin_payloads(),
    ids=[f"{index}-{payload['scenario']}" for index, payload in enumerate(builtin_payloads())],
)
def test_each_builtin_scenario_passes(jets_settings, payload):
    report = run_scenario(load_spec(payload))
    assert report.passed, report.notes


def test_builtin_suite_passes(jets_settings):
    aggregate = run_suite(builtin_suite())
    assert aggregate.passed, [(r.scenario, r.params, r.notes) for r in aggregate.failed]
    assert all(r.runtime_ms == 0 for r in aggregate.reports)


def test_suite_reports_are_deterministic(jets_settings):
    specs = builtin_suite()[:3]
    assert run_suite(specs).to_payload() == run_suite(specs).to_payload()
