from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Union, TYPE_CHECKING

from rigid_jets.constants import Matrix

if TYPE_CHECKING:
    # Import these only when type checking to avoid circular import at runtime
    from rigid_jets.scenarios import ScenarioSpec


@dataclass
class RigidJetsSettings:
    """
    RigidJetsSettings

    Configuration for the scenario runner, the numeric oracles and the framing
    candidate search.

    Exact computations never read tolerances from here; only the floating-point
    cross-checks do.
    """

    LOG_LEVEL: Union[str, int] = "WARNING"
    """
    Level name (or number) for the root logger configured by the command line.

    Set from the `RIGID_JETS_VERBOSITY` environment variable when present.
    """

    JOBS: int = 1
    """
    Number of worker processes used by `run_suite`. 1 runs scenarios sequentially in
    the current process.
    """

    RECORD_RUNTIME: bool = False
    """
    If True, reports carry the measured wall time in `runtime_ms`. Off by default so
    that json reports are byte-identical between runs.
    """

    ORACLE_TOLERANCE: float = 1e-6
    """
    Relative tolerance for numeric cross-checks of rational charts and conjugated families.
    """

    VOLUME_ORACLE_TOLERANCE: float = 1e-4
    """
    Relative tolerance for the volume chart, whose exact jet is evaluated at an
    irrational parameter value.
    """

    ORACLE_POINTS: int = 10
    """
    Number of random off-divisor points per oracle cross-check.
    """

    ORACLE_GRID: int = 16
    """
    Samples per axis of the complex polydisc grid used by the numeric oracle. Must
    exceed the jet order.
    """

    DEFAULT_SEED: int = 0
    """
    Seed used by scenarios that do not name one.
    """

    SUITE_RESOLVER: Callable[[], List["ScenarioSpec"]] = field(default_factory=lambda: _get_default_suite_resolver())
    """
    A function returning the scenarios run by `rigid-jets suite`.

    Example:
        def smoke_suite():
            return [load_spec({"scenario": "torus-degeneration", "n": 2, "k": 2})]

        RigidJetsSettings(SUITE_RESOLVER=smoke_suite)
    """

    CANDIDATE_RESOLVER: Callable[[int], List[Matrix]] = field(default_factory=lambda: _get_default_candidate_resolver())
    """
    A function `n -> list of n x n matrices` giving the linear parts tried by the framing
    candidate search when a scenario does not list its own.

    The default returns every signed permutation matrix.
    """


def _get_default_suite_resolver():
    from rigid_jets.resolvers import default_suite_resolver
    return default_suite_resolver


def _get_default_candidate_resolver():
    from rigid_jets.resolvers import signed_permutation_candidates
    return signed_permutation_candidates
