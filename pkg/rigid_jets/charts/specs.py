from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Tuple

from rigid_jets.constants import ChartKind
from rigid_jets.exceptions import DimensionMismatch, InvalidModel, OrderMismatch
from rigid_jets.jetcore.scalars import RationalFunctionField
from rigid_jets.utils import offset_names, parse_rational


def _check_dimension_and_order(n: int, k: int) -> None:
    if n < 2:
        raise DimensionMismatch(f"Blow-up charts need dimension n >= 2, got {n}")
    if k < 2:
        raise OrderMismatch(f"Degeneration needs truncation order k >= 2, got {k}")


def chart_variables(n: int) -> Tuple[str, ...]:
    """
    Offset variables of an n-dimensional chart: xi1, ..., xi{n-1}, eta.
    """
    return tuple(offset_names("xi", n - 1)) + ("eta",)


@dataclass(frozen=True)
class TorusChartSpec:
    """
    The plain blow-up chart mu: (x1, ..., x{n-1}, y) -> (x1*y, ..., x{n-1}*y, y).
    """

    n: int
    k: int
    param: str = "y"

    def __post_init__(self):
        _check_dimension_and_order(self.n, self.k)

    @property
    def kind(self) -> ChartKind:
        return ChartKind.TORUS

    @property
    def field(self) -> RationalFunctionField:
        return RationalFunctionField(self.param)

    @property
    def variables(self) -> Tuple[str, ...]:
        return chart_variables(self.n)


@dataclass(frozen=True)
class VolumeChartSpec:
    """
    The volume-preserving chart mu': (x', y') -> (x1' y'^delta, ..., y'^delta), delta = 1/n.

    The irrational power is avoided by taking s = y'^delta as the limit parameter and
    writing y' = s^n, so every coefficient stays in QQ(s).
    """

    n: int
    k: int
    param: str = "s"

    def __post_init__(self):
        _check_dimension_and_order(self.n, self.k)

    @property
    def kind(self) -> ChartKind:
        return ChartKind.VOLUME

    @property
    def delta(self) -> Fraction:
        return Fraction(1, self.n)

    @property
    def field(self) -> RationalFunctionField:
        return RationalFunctionField(self.param)

    @property
    def variables(self) -> Tuple[str, ...]:
        return chart_variables(self.n)


@dataclass(frozen=True)
class ShearSpec:
    """
    U(b): adds b * (offset `source`) to offset `target`, identity elsewhere.

    `source=None` means the last coordinate (the y-offset).
    """

    b: Any
    source: Optional[int] = None
    target: int = 0

    def indices(self, dims: int) -> Tuple[int, int]:
        source = dims - 1 if self.source is None else self.source
        for index in (source, self.target):
            if not 0 <= index < dims:
                raise DimensionMismatch(f"Shear index {index} out of range for dimension {dims}")
        if source == self.target:
            raise DimensionMismatch("A shear needs distinct source and target coordinates")
        return source, self.target


@dataclass(frozen=True)
class DegenerationScenario:
    """
    One degeneration run: the chart, the rational x-coordinates of the base point and
    the order k. The base-point y (or s) is always the symbolic limit parameter.
    For Lie charts `small` and `big` name the block embedding sl_small < sl_big.
    """

    chart: ChartKind
    n: int
    k: int
    base_x: Tuple[Fraction, ...] = field(default_factory=tuple)
    small: int = 2
    big: int = 3

    def __post_init__(self):
        if self.k < 2:
            raise OrderMismatch(f"Degeneration needs k >= 2 to exhibit a kernel element, got {self.k}")
        base_x = tuple(parse_rational(v) for v in self.base_x)
        if self.chart is not ChartKind.LIE:
            _check_dimension_and_order(self.n, self.k)
            if not base_x:
                base_x = tuple(Fraction(0) for _ in range(self.n - 1))
            if len(base_x) != self.n - 1:
                raise DimensionMismatch(
                    f"base_x needs {self.n - 1} coordinates for n = {self.n}, got {len(base_x)}"
                )
        elif self.small >= self.big:
            raise InvalidModel(f"sl_{self.small} is not a proper subalgebra of sl_{self.big}")
        object.__setattr__(self, "base_x", base_x)

    @property
    def substitution_exponent(self) -> int:
        """
        b = y^k for the torus and Lie charts, b = s^(n k) for the volume chart.
        """
        if self.chart is ChartKind.VOLUME:
            return self.n * self.k
        return self.k

    def chart_spec(self):
        if self.chart is ChartKind.TORUS:
            return TorusChartSpec(self.n, self.k)
        if self.chart is ChartKind.VOLUME:
            return VolumeChartSpec(self.n, self.k)
        raise InvalidModel("Lie charts are built from a LieAlgebraModel")
