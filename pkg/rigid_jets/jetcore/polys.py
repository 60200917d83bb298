from __future__ import annotations

from types import MappingProxyType
from typing import Any, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from rigid_jets.constants import MultiIndex, RingOp
from rigid_jets.exceptions import FieldMismatch, OrderMismatch, VariableMismatch
from rigid_jets.jetcore.scalars import QQ_FIELD, ScalarField
from rigid_jets.utils import graded_lex_key, unit_index


class TruncatedPoly:
    """
    A multivariate polynomial of total degree <= order over an exact scalar field.

    Terms are stored as a map from exponent tuples to nonzero coefficients. Every
    constructor normalizes: zero coefficients and terms above the order are dropped,
    so two values are equal exactly when their term maps are equal. Instances are
    never mutated after construction.
    """

    __slots__ = ("variables", "order", "field", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        order: int,
        terms: Optional[Mapping[MultiIndex, Any]] = None,
        field: ScalarField = QQ_FIELD,
    ):
        if order < 0:
            raise OrderMismatch(f"Truncation order must be nonnegative, got {order}")
        self.variables: Tuple[str, ...] = tuple(variables)
        self.order = order
        self.field = field
        normalized: Dict[MultiIndex, Any] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise VariableMismatch(
                    f"Exponent {exps} does not match variables {self.variables}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"Exponents must be nonnegative, got {exps}")
            if sum(exps) > order:
                continue
            value = field.convert(coef)
            if not field.is_zero(value):
                normalized[exps] = value
        self._terms = normalized

    @classmethod
    def _raw(cls, variables, order, field, terms: Dict[MultiIndex, Any]) -> "TruncatedPoly":
        # terms are already converted, nonzero and within the order
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.order = order
        poly.field = field
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, variables: Sequence[str], order: int, field: ScalarField = QQ_FIELD) -> "TruncatedPoly":
        return cls._raw(tuple(variables), order, field, {})

    @classmethod
    def constant(cls, value: Any, variables: Sequence[str], order: int, field: ScalarField = QQ_FIELD) -> "TruncatedPoly":
        return cls(variables, order, {tuple(0 for _ in variables): value}, field)

    @classmethod
    def variable(cls, index: int, variables: Sequence[str], order: int, field: ScalarField = QQ_FIELD) -> "TruncatedPoly":
        if order < 1:
            return cls.zero(variables, order, field)
        return cls._raw(tuple(variables), order, field, {unit_index(len(variables), index): field.one})

    @property
    def terms(self) -> Mapping[MultiIndex, Any]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def sorted_terms(self) -> Iterator[Tuple[MultiIndex, Any]]:
        for exps in sorted(self._terms, key=graded_lex_key):
            yield exps, self._terms[exps]

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: MultiIndex) -> Any:
        return self._terms.get(tuple(exps), self.field.zero)

    @property
    def constant_term(self) -> Any:
        return self.coefficient(tuple(0 for _ in self.variables))

    def lowest_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return min(sum(e) for e in self._terms)

    def degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def homogeneous_part(self, degree: int) -> "TruncatedPoly":
        return self._raw(
            self.variables, self.order, self.field,
            {e: c for e, c in self._terms.items() if sum(e) == degree},
        )

    def truncate(self, order: int) -> "TruncatedPoly":
        """
        Drops every term above `order`; the result has truncation order `order`.
        """
        if order > self.order:
            raise OrderMismatch(f"Cannot truncate an order-{self.order} polynomial to order {order}")
        return self._raw(
            self.variables, order, self.field,
            {e: c for e, c in self._terms.items() if sum(e) <= order},
        )

    def lift(self, order: int) -> "TruncatedPoly":
        # reads the stored polynomial at a higher truncation order
        if order < self.order:
            return self.truncate(order)
        return self._raw(self.variables, order, self.field, dict(self._terms))

    def over(self, field: ScalarField) -> "TruncatedPoly":
        if field == self.field:
            return self
        return TruncatedPoly(self.variables, self.order, dict(self._terms), field)

    def map_coefficients(self, func, field: ScalarField) -> "TruncatedPoly":
        return TruncatedPoly(
            self.variables, self.order, {e: func(c) for e, c in self._terms.items()}, field
        )

    def derivative(self, index: int) -> "TruncatedPoly":
        terms: Dict[MultiIndex, Any] = {}
        for exps, coef in self._terms.items():
            power = exps[index]
            if power == 0:
                continue
            lowered = exps[:index] + (power - 1,) + exps[index + 1:]
            terms[lowered] = coef * power
        return self._raw(self.variables, self.order, self.field, terms)

    def shift(self, point: Sequence[Any]) -> "TruncatedPoly":
        """
        Re-expands about `point`: the result q satisfies q(w) = self(point + w).
        """
        if len(point) != self.nvars:
            raise VariableMismatch(f"Point {tuple(point)} does not match variables {self.variables}")
        field = self.field
        shifted = [
            TruncatedPoly.variable(i, self.variables, self.order, field) + field.convert(value)
            for i, value in enumerate(point)
        ]
        result = TruncatedPoly.zero(self.variables, self.order, field)
        for exps, coef in self.sorted_terms():
            term = TruncatedPoly.constant(coef, self.variables, self.order, field)
            for base, power in zip(shifted, exps):
                if power:
                    term = term * base ** power
            result = result + term
        return result

    def _check_compatible(self, other: "TruncatedPoly") -> None:
        if self.variables != other.variables:
            raise VariableMismatch(f"Variables differ: {self.variables} vs {other.variables}")
        if self.order != other.order:
            raise OrderMismatch(f"Orders differ: {self.order} vs {other.order}")
        if self.field != other.field:
            raise FieldMismatch(
                f"Scalar fields differ: {self.field.describe()} vs {other.field.describe()}"
            )

    def __add__(self, other: Any) -> "TruncatedPoly":
        if not isinstance(other, TruncatedPoly):
            other = TruncatedPoly.constant(other, self.variables, self.order, self.field)
        self._check_compatible(other)
        terms = dict(self._terms)
        for exps, coef in other._terms.items():
            value = terms[exps] + coef if exps in terms else coef
            if self.field.is_zero(value):
                terms.pop(exps, None)
            else:
                terms[exps] = value
        return self._raw(self.variables, self.order, self.field, terms)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedPoly":
        return self._raw(self.variables, self.order, self.field, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> "TruncatedPoly":
        if not isinstance(other, TruncatedPoly):
            other = TruncatedPoly.constant(other, self.variables, self.order, self.field)
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncatedPoly":
        return (-self) + other

    def scale(self, value: Any) -> "TruncatedPoly":
        scalar = self.field.convert(value)
        if self.field.is_zero(scalar):
            return self.zero(self.variables, self.order, self.field)
        return self._raw(self.variables, self.order, self.field, {e: c * scalar for e, c in self._terms.items()})

    def __mul__(self, other: Any) -> "TruncatedPoly":
        if not isinstance(other, TruncatedPoly):
            return self.scale(other)
        self._check_compatible(other)
        return self._raw(self.variables, self.order, self.field, _mul_terms(self._terms, other._terms, self.order, self.field))

    def __rmul__(self, other: Any) -> "TruncatedPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "TruncatedPoly":
        if exponent < 0:
            raise ValueError("Negative powers of truncated polynomials are not defined")
        result = TruncatedPoly.constant(1, self.variables, self.order, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.order == other.order
            and self.field == other.field
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.order, self.field, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TruncatedPoly({self}, order={self.order}, field={self.field.describe()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps) if e
            ]
            monomial = "*".join(factors)
            text = str(self.field.domain.to_sympy(self.field.to_domain(coef)))
            if not monomial:
                parts.append(text)
            elif text == "1":
                parts.append(monomial)
            elif text == "-1":
                parts.append(f"-{monomial}")
            else:
                parts.append(f"({text})*{monomial}")
        return " + ".join(parts)


def _mul_terms(left: Mapping[MultiIndex, Any], right: Mapping[MultiIndex, Any], order: int, field: ScalarField) -> Dict[MultiIndex, Any]:
    out: Dict[MultiIndex, Any] = {}
    right_items = sorted(((sum(e), e, c) for e, c in right.items()), key=lambda item: item[0])
    for e1, c1 in left.items():
        room = order - sum(e1)
        if room < 0:
            continue
        for d2, e2, c2 in right_items:
            if d2 > room:
                break
            exps = tuple(a + b for a, b in zip(e1, e2))
            value = c1 * c2
            out[exps] = out[exps] + value if exps in out else value
    return {e: c for e, c in out.items() if not field.is_zero(c)}


def poly_ring_ops(a: TruncatedPoly, b: Any, op: RingOp) -> TruncatedPoly:
    """
    Exact ring operation on truncated polynomials. For RingOp.SCALE, `b` is a scalar.

    Raises:
        VariableMismatch, OrderMismatch, FieldMismatch: If the operands are incompatible
    """
    if op is RingOp.SCALE:
        return a.scale(b)
    if not isinstance(b, TruncatedPoly):
        raise TypeError(f"{op.value} expects two truncated polynomials")
    if op is RingOp.ADD:
        return a + b
    if op is RingOp.SUB:
        return a - b
    return a * b
