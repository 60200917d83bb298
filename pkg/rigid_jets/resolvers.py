from fractions import Fraction
from itertools import permutations, product
from typing import List, TYPE_CHECKING

from rigid_jets.constants import Matrix

if TYPE_CHECKING:
    from rigid_jets.scenarios import ScenarioSpec
    from rigid_jets.settings_type import RigidJetsSettings


def get_settings() -> "RigidJetsSettings":
    from rigid_jets.settings import rigid_jets_settings
    return rigid_jets_settings


def default_suite_resolver() -> List["ScenarioSpec"]:
    """
    Default SUITE_RESOLVER: the built-in suite covering every computation in the
    coverage manifest.
    """
    from rigid_jets.scenarios import builtin_suite
    return builtin_suite()


def signed_permutation_candidates(n: int) -> List[Matrix]:
    """
    Default CANDIDATE_RESOLVER: all 2^n * n! signed permutation matrices, identity first.
    """
    candidates: List[Matrix] = []
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            candidates.append([
                [Fraction(signs[i]) if j == perm[i] else Fraction(0) for j in range(n)]
                for i in range(n)
            ])
    return candidates


def scalar_candidates(values: List[Fraction]) -> List[Matrix]:
    """
    1 x 1 candidates from a list of scalars, for one-dimensional framings.
    """
    return [[[Fraction(v)]] for v in values]


__all__ = [
    "get_settings",
    "default_suite_resolver",
    "signed_permutation_candidates",
    "scalar_candidates",
]
