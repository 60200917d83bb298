from rigid_jets.constants import ScenarioKind
from rigid_jets.coverage import MANIFEST, uncovered
from rigid_jets.scenarios import builtin_suite


def test_builtin_suite_covers_the_manifest():
    assert uncovered(spec.kind for spec in builtin_suite()) == []


def test_missing_kinds_are_reported():
    missing = uncovered([ScenarioKind.TORUS_DEGENERATION])
    names = {c.name for c in missing}
    assert "numeric Taylor oracle" in names
    assert "closed form b eta (y + eta)^-1" not in names


def test_manifest_names_are_unique():
    assert len({c.name for c in MANIFEST}) == len(MANIFEST)
    assert all(c.kinds for c in MANIFEST)
