import json

from rigid_jets.jetcore.maps import TruncatedPolyMap
from rigid_jets.jetcore.polys import TruncatedPoly
from rigid_jets.jetcore.serialization import (
    canonical_dumps,
    deserialize_map,
    deserialize_poly,
    serialize_map,
    serialize_poly,
)


def test_poly_payload_is_graded_lex():
    x = TruncatedPoly.variable(0, ("x", "y"), 2)
    y = TruncatedPoly.variable(1, ("x", "y"), 2)
    payload = serialize_poly(y * y + x.scale("1/2"))
    assert payload == {
        "vars": ["x", "y"],
        "order": 2,
        "terms": [{"exp": [1, 0], "coef": "1/2"}, {"exp": [0, 2], "coef": "1"}],
    }
    assert deserialize_poly(payload) == y * y + x.scale("1/2")


def test_parametric_map_keeps_its_field(qq_y):
    zero = TruncatedPolyMap([TruncatedPoly.zero(("eta",), 2, qq_y)])
    payload = serialize_map(zero)
    assert payload["param"] == "y"
    assert deserialize_map(payload) == zero


def test_canonical_dumps_is_key_sorted():
    text = canonical_dumps({"b": 1, "a": [1, 2]}, indent=None)
    assert text == '{"a":[1,2],"b":1}'
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_rational_function_map_reserializes_identically(qq_y):
    y = qq_y.gen
    variables = ("xi1", "eta")
    f = TruncatedPolyMap([
        TruncatedPoly(variables, 3, {(1, 0): 1, (1, 1): y / (1 + y), (0, 3): (y ** 2 - 3) / (2 * y + 1)}, qq_y),
        TruncatedPoly(variables, 3, {(0, 1): 1, (2, 1): -1 / (3 * y ** 2)}, qq_y),
    ])
    text = canonical_dumps(serialize_map(f))
    restored = deserialize_map(json.loads(text))
    assert restored == f
    assert canonical_dumps(serialize_map(restored)) == text
