"""
Exact scalar fields for jet coefficients.

Two fields are supported: the rationals, with elements stored as `fractions.Fraction`,
and univariate rational functions over the rationals in one named limit parameter,
with elements taken from sympy's `QQ.frac_field`. A value never mixes the two; lifting
a rational into a function field is always an explicit `convert`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Union

from sympy import Integer, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement

from rigid_jets.exceptions import FieldMismatch, ParameterRequired, PoleAtZero
from rigid_jets.utils import format_rational, parse_rational

ScalarField = Union["RationalField", "RationalFunctionField"]


def _to_fraction(value: Any) -> Fraction:
    # sympy ground elements (PythonMPQ, gmpy mpq/mpz, int) all expose numerator/denominator
    return Fraction(int(value.numerator), int(value.denominator))


def _poly_terms(poly: Any) -> Dict[int, Fraction]:
    return {monom[0]: _to_fraction(coeff) for monom, coeff in poly.terms() if coeff}


@lru_cache(maxsize=None)
def _fraction_domain(param: str):
    return QQ.frac_field(Symbol(param))


@dataclass(frozen=True)
class RationalField:
    """
    The field of rational numbers. Elements are `Fraction` values.
    """

    param: Optional[str] = None

    @property
    def domain(self):
        return QQ

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def is_parametric(self) -> bool:
        return False

    def convert(self, value: Any) -> Fraction:
        if isinstance(value, FracElement):
            raise FieldMismatch(f"Cannot read a rational function {value} as a rational")
        if isinstance(value, Fraction):
            return value
        return parse_rational(value)

    def is_zero(self, value: Fraction) -> bool:
        return value == 0

    def to_domain(self, value: Fraction):
        return QQ(value.numerator, value.denominator)

    def from_domain(self, value: Any) -> Fraction:
        return _to_fraction(value)

    def limit_at_zero(self, value: Fraction) -> Fraction:
        return value

    def evaluate(self, value: Fraction, param: Optional[complex] = None) -> float:
        return float(value)

    def serialize(self, value: Fraction) -> str:
        return format_rational(value)

    def deserialize(self, payload: Any) -> Fraction:
        return parse_rational(payload)

    def describe(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class RationalFunctionField:
    """
    The field QQ(param) of univariate rational functions. Elements are kept by sympy in
    cancelled form, so equality is decidable by comparing numerators and denominators.
    """

    param: str = "y"

    @property
    def domain(self):
        return _fraction_domain(self.param)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def gen(self):
        return self.domain.gens[0]

    @property
    def is_parametric(self) -> bool:
        return True

    def convert(self, value: Any):
        if isinstance(value, FracElement):
            if value.field != self.domain.field:
                raise FieldMismatch(
                    f"Element of {value.field} cannot be used in QQ({self.param})"
                )
            return value
        rational = value if isinstance(value, Fraction) else parse_rational(value)
        if rational.denominator == 1:
            return self.domain.from_sympy(Integer(rational.numerator))
        return self.domain.from_sympy(Rational(rational.numerator, rational.denominator))

    def is_zero(self, value: Any) -> bool:
        return not value

    def to_domain(self, value: Any):
        return value

    def from_domain(self, value: Any):
        return value

    def numerator_terms(self, value: Any) -> Dict[int, Fraction]:
        return _poly_terms(value.numer)

    def denominator_terms(self, value: Any) -> Dict[int, Fraction]:
        return _poly_terms(value.denom)

    def limit_at_zero(self, value: Any) -> Fraction:
        """
        Substitutes param = 0. Raises PoleAtZero when the cancelled denominator
        vanishes there.
        """
        den = self.denominator_terms(value).get(0, Fraction(0))
        if den == 0:
            raise PoleAtZero(
                f"{self._text(value)} has a pole at {self.param} = 0; the limit does not exist"
            )
        return self.numerator_terms(value).get(0, Fraction(0)) / den

    def evaluate(self, value: Any, param: Optional[complex] = None) -> complex:
        if param is None:
            raise ParameterRequired(f"A value for {self.param} is required")
        num = sum(float(c) * param ** e for e, c in self.numerator_terms(value).items())
        den = sum(float(c) * param ** e for e, c in self.denominator_terms(value).items())
        return num / den

    def serialize(self, value: Any) -> Dict[str, Any]:
        num = self.numerator_terms(value)
        den = self.denominator_terms(value)
        # monic denominator makes the serialized form canonical
        lead = den[max(den)]
        return {
            "param": self.param,
            "num": self._serialize_terms({e: c / lead for e, c in num.items()}),
            "den": self._serialize_terms({e: c / lead for e, c in den.items()}),
        }

    def deserialize(self, payload: Any):
        if not isinstance(payload, dict):
            return self.convert(payload)
        if payload.get("param") != self.param:
            raise FieldMismatch(
                f"Coefficient over {payload.get('param')!r} cannot be read in QQ({self.param})"
            )
        t = Symbol(self.param)
        num = self._expr(payload["num"], t)
        den = self._expr(payload["den"], t)
        return self.domain.from_sympy(num) / self.domain.from_sympy(den)

    def describe(self) -> str:
        return f"QQ({self.param})"

    @staticmethod
    def _expr(terms: List[Dict[str, Any]], t: Symbol):
        expr = Integer(0)
        for term in terms:
            coef = parse_rational(term["coef"])
            expr += Rational(coef.numerator, coef.denominator) * t ** int(term["exp"])
        return expr

    @staticmethod
    def _serialize_terms(terms: Dict[int, Fraction]) -> List[Dict[str, Any]]:
        return [{"exp": e, "coef": format_rational(terms[e])} for e in sorted(terms)]

    def _text(self, value: Any) -> str:
        return str(self.domain.to_sympy(value))


QQ_FIELD = RationalField()


def field_of(value: Any) -> ScalarField:
    """
    The natural field of a bare scalar value.
    """
    if isinstance(value, FracElement):
        symbol = value.field.symbols[0]
        return RationalFunctionField(str(symbol))
    return QQ_FIELD
