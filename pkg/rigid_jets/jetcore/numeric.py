from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from rigid_jets.constants import MultiIndex
from rigid_jets.exceptions import DimensionMismatch, ParameterRequired
from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.polys import TruncatedPoly


def _coefficient_arrays(poly: TruncatedPoly, param: Optional[complex]) -> Tuple[np.ndarray, np.ndarray]:
    if poly.field.is_parametric and param is None:
        raise ParameterRequired(f"Coefficients live in {poly.field.describe()}; pass a parameter value")
    exponents = np.array([e for e, _ in poly.sorted_terms()], dtype=float).reshape(-1, poly.nvars)
    coefficients = np.array([poly.field.evaluate(c, param) for _, c in poly.sorted_terms()], dtype=complex)
    return exponents, coefficients


def evaluate_poly(poly: TruncatedPoly, point: Sequence[complex], param: Optional[complex] = None) -> complex:
    if len(point) != poly.nvars:
        raise DimensionMismatch(f"Point of length {len(point)} for {poly.nvars} variables")
    if poly.is_zero():
        return 0j
    exponents, coefficients = _coefficient_arrays(poly, param)
    values = np.prod(np.power(np.asarray(point, dtype=complex), exponents), axis=1)
    return complex(np.dot(coefficients, values))


def jet_evaluate_numeric(f: TruncatedPolyMap, point: Sequence[float], param: Optional[float] = None) -> List[float]:
    """
    Floating-point evaluation of every component at `point`. Only oracle comparisons
    use this; verdicts never depend on it.

    Raises:
        DimensionMismatch: If the point does not match the source dimension
        ParameterRequired: If the coefficients are parametric and no `param` is given
    """
    if len(point) != f.source_dim:
        raise DimensionMismatch(f"Point of length {len(point)} for a map with {f.source_dim} inputs")
    return [evaluate_poly(c, point, param).real for c in f]


@dataclass(frozen=True)
class NumericJet:
    """
    A jet with float coefficients, as produced by the numeric oracle.
    """

    variables: Tuple[str, ...]
    order: int
    components: Tuple[Dict[MultiIndex, complex], ...]

    def coefficient(self, component: int, exps: MultiIndex) -> complex:
        return self.components[component].get(tuple(exps), 0j)

    def _pairs(self, symbolic: TruncatedPolyMap, param: Optional[complex]) -> Iterator[Tuple[complex, complex]]:
        if len(symbolic) != len(self.components):
            raise DimensionMismatch("Numeric and symbolic jets have different target dimensions")
        for index, poly in enumerate(symbolic):
            for exps in set(self.components[index]) | set(poly.terms):
                exact = complex(poly.field.evaluate(poly.terms[exps], param)) if exps in poly.terms else 0j
                yield self.coefficient(index, exps), exact

    def max_abs_difference(self, symbolic: TruncatedPolyMap, param: Optional[complex] = None) -> float:
        return max((abs(estimate - exact) for estimate, exact in self._pairs(symbolic, param)), default=0.0)

    def agrees_with(
        self,
        symbolic: TruncatedPolyMap,
        param: Optional[complex] = None,
        rtol: float = 1e-6,
        atol: float = 1e-9,
    ) -> bool:
        return all(
            np.isclose(estimate, exact, rtol=rtol, atol=atol)
            for estimate, exact in self._pairs(symbolic, param)
        )
