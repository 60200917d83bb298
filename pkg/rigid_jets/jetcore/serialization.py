"""
JSON codec for truncated polynomials and maps.

A polynomial is written as {"vars", "order", "terms"} with terms in graded-lex order;
each term is {"exp": [...], "coef": ...}. Rational coefficients are "p/q" strings,
parametric ones are {"param", "num", "den"} objects. Polynomials over a function field
also carry a top-level "param" so that the zero polynomial keeps its field.
"""
import json
from typing import Any, Dict, List, Optional

from rigid_jets.exceptions import DimensionMismatch
from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.scalars import QQ_FIELD, RationalFunctionField, ScalarField


def field_from_param(param: Optional[str]) -> ScalarField:
    return RationalFunctionField(param) if param else QQ_FIELD


def _serialize_terms(poly: TruncatedPoly) -> List[Dict[str, Any]]:
    return [{"exp": list(exps), "coef": poly.field.serialize(coef)} for exps, coef in poly.sorted_terms()]


def serialize_poly(poly: TruncatedPoly) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "vars": list(poly.variables),
        "order": poly.order,
        "terms": _serialize_terms(poly),
    }
    if poly.field.is_parametric:
        payload["param"] = poly.field.param
    return payload


def deserialize_poly(payload: Dict[str, Any]) -> TruncatedPoly:
    field = field_from_param(payload.get("param"))
    return _poly_from_terms(payload["vars"], int(payload["order"]), payload["terms"], field)


def _poly_from_terms(variables: List[str], order: int, terms: List[Dict[str, Any]], field: ScalarField) -> TruncatedPoly:
    return TruncatedPoly(
        variables, order,
        {tuple(term["exp"]): field.deserialize(term["coef"]) for term in terms},
        field,
    )


def serialize_map(f: TruncatedPolyMap) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "vars": list(f.variables),
        "order": f.order,
        "components": [_serialize_terms(c) for c in f],
    }
    if f.field.is_parametric:
        payload["param"] = f.field.param
    return payload


def deserialize_map(payload: Dict[str, Any]) -> TruncatedPolyMap:
    field = field_from_param(payload.get("param"))
    components = payload.get("components") or []
    if not components:
        raise DimensionMismatch("A serialized map needs at least one component")
    return TruncatedPolyMap([
        _poly_from_terms(payload["vars"], int(payload["order"]), terms, field) for terms in components
    ])


def canonical_dumps(payload: Any, indent: Optional[int] = 2) -> str:
    """
    Byte-deterministic JSON text: sorted keys, fixed separators, no ascii escaping.
    """
    separators = (",", ": ") if indent is not None else (",", ":")
    return json.dumps(payload, sort_keys=True, indent=indent, separators=separators, ensure_ascii=False)
