"""
Scenario specifications: loading, validation and the built-in suite.

A scenario is a json object naming its kind under "scenario", with the kind's
parameters at top level and optional "seed" and "expect" keys. Parameters are
validated against a per-kind schema when the file is loaded, so a bad file never
reaches the runner.
"""
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from rigid_jets.constants import OracleTarget, ScenarioKind
from rigid_jets.exceptions import JetError, ScenarioSpecError
from rigid_jets.jetcore.serialization import deserialize_poly, serialize_poly
from rigid_jets.resolvers import get_settings
from rigid_jets.rigidity.framing import FramingSpec
from rigid_jets.utils import format_rational, parse_rational


@dataclass(frozen=True)
class ParamSchema:
    name: str
    kind: str
    description: str
    required: bool = False
    minimum: Optional[int] = None
    maximum: Optional[int] = None
    choices: Tuple[str, ...] = ()

    def describe(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"type": self.kind, "required": self.required, "description": self.description}
        if self.minimum is not None:
            payload["min"] = self.minimum
        if self.maximum is not None:
            payload["max"] = self.maximum
        if self.choices:
            payload["choices"] = list(self.choices)
        return payload


def _degeneration_schema() -> Tuple[ParamSchema, ...]:
    return (
        ParamSchema("n", "int", "chart dimension", required=True, minimum=2, maximum=5),
        ParamSchema("k", "int", "jet order", required=True, minimum=2, maximum=8),
        ParamSchema("base_x", "rationals", "x-coordinates of the base point (n-1 values, default 0)"),
    )


SCHEMAS: Dict[ScenarioKind, Tuple[ParamSchema, ...]] = {
    ScenarioKind.TORUS_DEGENERATION: _degeneration_schema(),
    ScenarioKind.VOLUME_DEGENERATION: _degeneration_schema(),
    ScenarioKind.LIE_DEGENERATION: (
        ParamSchema("small", "int", "size m of the block subalgebra sl_m", minimum=2, maximum=4),
        ParamSchema("big", "int", "size N of the ambient sl_N", minimum=3, maximum=5),
        ParamSchema("k", "int", "jet order", required=True, minimum=2, maximum=5),
        ParamSchema("base_x", "rationals", "x-coordinates of the base point (N^2 - m^2 - 1 values, default 0)"),
    ),
    ScenarioKind.FRAMING_KERNEL: (
        ParamSchema("n", "int", "dimension", required=True, minimum=1, maximum=3),
        ParamSchema("l", "int", "order of the kernel solve", required=True, minimum=2, maximum=6),
        ParamSchema("point", "rationals", "base point p (n values, default 0)"),
        ParamSchema("vector_fields", "polys", "n fields, each a list of n serialized polynomials", required=True),
        ParamSchema("candidates", "matrices", "candidate linear parts (n x n matrices, or scalars when n = 1)"),
    ),
    ScenarioKind.GENCONN_RIGIDITY: (
        ParamSchema("n", "int", "dimension", required=True, minimum=2, maximum=4),
    ),
    ScenarioKind.GL_STABILIZER: (
        ParamSchema("n", "int", "dimension", required=True, minimum=2, maximum=5),
    ),
    ScenarioKind.ORACLE_CROSSCHECK: (
        ParamSchema("target", "choice", "closed form compared", required=True, choices=tuple(t.value for t in OracleTarget)),
        ParamSchema("n", "int", "chart dimension", required=True, minimum=2, maximum=3),
        ParamSchema("k", "int", "jet order", required=True, minimum=2, maximum=4),
        ParamSchema("points", "int", "number of random points (default ORACLE_POINTS)", minimum=1, maximum=50),
        ParamSchema("b", "rational", "shear parameter for the conjugate target (default 1)"),
    ),
}

EXPECT_KEYS: Dict[str, Callable[[Any], Any]] = {
    "lowest_nontrivial_order": int,
    "top_coefficient": lambda v: format_rational(parse_rational(v)),
    "kernel_dimension": int,
    "surviving_candidates": int,
}

RESERVED_KEYS = ("scenario", "seed", "expect")


@dataclass(frozen=True)
class ScenarioSpec:
    """
    A validated scenario. `params` holds json-ready values in canonical form.
    """

    kind: ScenarioKind
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    expect: Dict[str, Any] = field(default_factory=dict)

    def to_payload(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"scenario": self.kind.value, **self.params, "seed": self.seed}
        if self.expect:
            payload["expect"] = dict(self.expect)
        return payload


def _int(name: str, value: Any, schema: ParamSchema) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioSpecError(f"expected an integer, got {value!r}", field=name)
    if schema.minimum is not None and value < schema.minimum:
        raise ScenarioSpecError(f"must be at least {schema.minimum}, got {value}", field=name)
    if schema.maximum is not None and value > schema.maximum:
        raise ScenarioSpecError(f"must be at most {schema.maximum}, got {value}", field=name)
    return value


def _rational(name: str, value: Any) -> str:
    try:
        return format_rational(parse_rational(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioSpecError(str(exc), field=name) from exc


def _rationals(name: str, value: Any) -> List[str]:
    if not isinstance(value, list):
        raise ScenarioSpecError(f"expected a list of rationals, got {value!r}", field=name)
    return [_rational(name, v) for v in value]


def _matrices(name: str, value: Any) -> List[List[List[str]]]:
    if not isinstance(value, list):
        raise ScenarioSpecError("expected a list of matrices", field=name)
    matrices = []
    for item in value:
        if isinstance(item, list):
            if not all(isinstance(row, list) for row in item):
                raise ScenarioSpecError(f"matrix rows must be lists, got {item!r}", field=name)
            matrices.append([[_rational(name, v) for v in row] for row in item])
        else:
            matrices.append([[_rational(name, item)]])
    return matrices


def _polys(name: str, value: Any) -> List[List[Dict[str, Any]]]:
    if not isinstance(value, list) or not all(isinstance(components, list) for components in value):
        raise ScenarioSpecError("expected a list of fields, each a list of serialized polynomials", field=name)
    try:
        return [[serialize_poly(deserialize_poly(component)) for component in components] for components in value]
    except (KeyError, TypeError, ValueError, JetError) as exc:
        raise ScenarioSpecError(f"malformed polynomial: {exc}", field=name) from exc


def _check_value(schema: ParamSchema, value: Any) -> Any:
    name = schema.name
    if schema.kind == "int":
        return _int(name, value, schema)
    if schema.kind == "rational":
        return _rational(name, value)
    if schema.kind == "rationals":
        return _rationals(name, value)
    if schema.kind == "matrices":
        return _matrices(name, value)
    if schema.kind == "polys":
        return _polys(name, value)
    if value not in schema.choices:
        raise ScenarioSpecError(f"must be one of {', '.join(schema.choices)}, got {value!r}", field=name)
    return value


def _require_length(name: str, values: Sequence[Any], length: int) -> None:
    if len(values) != length:
        raise ScenarioSpecError(f"needs {length} values, got {len(values)}", field=name)


def _check_cross_fields(kind: ScenarioKind, params: Dict[str, Any]) -> None:
    if kind in (ScenarioKind.TORUS_DEGENERATION, ScenarioKind.VOLUME_DEGENERATION):
        params.setdefault("base_x", ["0"] * (params["n"] - 1))
        _require_length("base_x", params["base_x"], params["n"] - 1)
    elif kind is ScenarioKind.LIE_DEGENERATION:
        params.setdefault("small", 2)
        params.setdefault("big", 3)
        if params["big"] <= params["small"]:
            raise ScenarioSpecError(f"must exceed small = {params['small']}", field="big")
        count = params["big"] ** 2 - params["small"] ** 2 - 1
        params.setdefault("base_x", ["0"] * count)
        _require_length("base_x", params["base_x"], count)
    elif kind is ScenarioKind.FRAMING_KERNEL:
        n = params["n"]
        params.setdefault("point", ["0"] * n)
        _require_length("point", params["point"], n)
        _require_length("vector_fields", params["vector_fields"], n)
        for components in params["vector_fields"]:
            _require_length("vector_fields", components, n)
        for matrix in params.get("candidates", []):
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise ScenarioSpecError(f"candidates must be {n} x {n}", field="candidates")
        try:
            build_framing(params)
        except JetError as exc:
            raise ScenarioSpecError(exc.message, field="vector_fields") from exc
    elif kind is ScenarioKind.ORACLE_CROSSCHECK:
        if params["target"] != OracleTarget.CONJUGATE.value and "b" in params:
            raise ScenarioSpecError("only the conjugate target takes a shear parameter", field="b")


def build_framing(params: Dict[str, Any]) -> FramingSpec:
    fields = tuple(tuple(deserialize_poly(c) for c in components) for components in params["vector_fields"])
    return FramingSpec(params["n"], fields)


def load_spec(payload: Any) -> ScenarioSpec:
    """
    Validates one scenario object.

    Raises:
        ScenarioSpecError: Naming the offending field, for unknown kinds, unknown or
            missing keys and out-of-range values
    """
    if not isinstance(payload, dict):
        raise ScenarioSpecError(f"a scenario must be a json object, got {type(payload).__name__}")
    try:
        kind = ScenarioKind(payload.get("scenario"))
    except ValueError:
        known = ", ".join(k.value for k in ScenarioKind)
        raise ScenarioSpecError(f"unknown kind {payload.get('scenario')!r}; expected one of {known}", field="scenario")
    schema = {s.name: s for s in SCHEMAS[kind]}
    for key in payload:
        if key not in schema and key not in RESERVED_KEYS:
            raise ScenarioSpecError(f"unknown parameter for {kind.value}", field=key)

    params: Dict[str, Any] = {}
    for name, item in schema.items():
        if name in payload:
            params[name] = _check_value(item, payload[name])
        elif item.required:
            raise ScenarioSpecError(f"required for {kind.value}", field=name)
    _check_cross_fields(kind, params)

    seed = payload.get("seed", get_settings().DEFAULT_SEED)
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ScenarioSpecError(f"expected a nonnegative integer, got {seed!r}", field="seed")

    expect_payload = payload.get("expect") or {}
    if not isinstance(expect_payload, dict):
        raise ScenarioSpecError("expected an object", field="expect")
    expect = {}
    for key, value in expect_payload.items():
        if key not in EXPECT_KEYS:
            raise ScenarioSpecError(f"unknown expectation; expected one of {', '.join(EXPECT_KEYS)}", field=f"expect.{key}")
        try:
            expect[key] = EXPECT_KEYS[key](value)
        except (TypeError, ValueError) as exc:
            raise ScenarioSpecError(str(exc), field=f"expect.{key}") from exc
    return ScenarioSpec(kind=kind, params=params, seed=seed, expect=expect)


def load_specs(payload: Any) -> List[ScenarioSpec]:
    """
    One scenario object, or a list of them.
    """
    if isinstance(payload, list):
        specs = []
        for index, item in enumerate(payload):
            try:
                specs.append(load_spec(item))
            except ScenarioSpecError as exc:
                field_name = f"[{index}].{exc.field}" if exc.field else f"[{index}]"
                raise ScenarioSpecError(exc.detail, field=field_name) from exc
        return specs
    return [load_spec(payload)]


def load_scenarios(path: Union[str, Path]) -> List[ScenarioSpec]:
    """
    Raises:
        OSError: If the file cannot be read
        ScenarioSpecError: If it is not valid json or a scenario is invalid
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSpecError(f"invalid json in {path}: {exc.msg} at line {exc.lineno}") from exc
    return load_specs(payload)


def _poly_1d(terms: Dict[int, Union[int, str]]) -> Dict[str, Any]:
    degree = max(terms)
    return {
        "vars": ["x"],
        "order": degree,
        "terms": [{"exp": [e], "coef": str(terms[e])} for e in sorted(terms)],
    }


def _poly_2d(terms: Dict[Tuple[int, int], Union[int, str]]) -> Dict[str, Any]:
    degree = max((sum(e) for e in terms), default=0)
    return {
        "vars": ["x1", "x2"],
        "order": degree,
        "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(terms.items())],
    }


def framing_examples() -> List[Dict[str, Any]]:
    """
    x^2 d/dx and x^3 d/dx at 0, a frame and a degenerate planar framing.
    """
    halves = ["-2", "-1", "-1/2", "1/2", "1", "2"]
    examples = [
        {
            "scenario": "framing-kernel", "n": 1, "l": 2,
            "vector_fields": [[_poly_1d({2: 1})]],
            "candidates": halves,
            "expect": {"kernel_dimension": 1, "surviving_candidates": 1},
        },
        {
            "scenario": "framing-kernel", "n": 1, "l": 2,
            "vector_fields": [[_poly_1d({3: 1})]],
            "candidates": ["-1", "1"],
            "expect": {"kernel_dimension": 1, "surviving_candidates": 2},
        },
        {
            "scenario": "framing-kernel", "n": 1, "l": 2,
            "vector_fields": [[_poly_1d({0: 1})]],
            "expect": {"kernel_dimension": 0, "surviving_candidates": 1},
        },
        {
            "scenario": "framing-kernel", "n": 2, "l": 2,
            "vector_fields": [
                [_poly_2d({(0, 0): 1}), _poly_2d({})],
                [_poly_2d({}), _poly_2d({(2, 0): 1, (0, 2): 1})],
            ],
            "expect": {"kernel_dimension": 2, "surviving_candidates": 1},
        },
    ]
    # a frame at the origin: d/dx + y d/dy and (1 + x) d/dy
    frame = [
        [_poly_2d({(0, 0): 1}), _poly_2d({(0, 1): 1})],
        [_poly_2d({}), _poly_2d({(0, 0): 1, (1, 0): 1})],
    ]
    for l in (2, 3, 4):
        examples.append({
            "scenario": "framing-kernel", "n": 2, "l": l, "vector_fields": frame,
            "expect": {"kernel_dimension": 0, "surviving_candidates": 1},
        })
    return examples


def builtin_payloads() -> List[Dict[str, Any]]:
    payloads: List[Dict[str, Any]] = []
    for n in (2, 3):
        for k in (2, 3, 4, 5):
            payloads.append({
                "scenario": "torus-degeneration", "n": n, "k": k,
                "expect": {"lowest_nontrivial_order": k, "top_coefficient": str((-1) ** (k - 1))},
            })
    for n in (2, 3):
        for k in (2, 3, 4):
            expect: Dict[str, Any] = {"lowest_nontrivial_order": k}
            if (n, k) == (2, 2):
                # r_2 = 3/8 for delta = 1/2; the limit carries -r_k
                expect["top_coefficient"] = "-3/8"
            payloads.append({"scenario": "volume-degeneration", "n": n, "k": k, "expect": expect})
    for k in (2, 3):
        payloads.append({"scenario": "lie-degeneration", "small": 2, "big": 3, "k": k, "expect": {"lowest_nontrivial_order": k}})
    payloads.extend(framing_examples())
    for n in (2, 3):
        payloads.append({"scenario": "genconn-rigidity", "n": n, "expect": {"kernel_dimension": 4 if n == 2 else 20}})
    for n in (2, 3, 4):
        payloads.append({"scenario": "gl-stabilizer", "n": n})
    payloads.append({"scenario": "oracle-crosscheck", "target": "torus", "n": 2, "k": 3})
    payloads.append({"scenario": "oracle-crosscheck", "target": "torus", "n": 3, "k": 2})
    payloads.append({"scenario": "oracle-crosscheck", "target": "volume", "n": 2, "k": 3})
    payloads.append({"scenario": "oracle-crosscheck", "target": "conjugate", "n": 2, "k": 3, "b": "1"})
    return payloads


def builtin_suite() -> List[ScenarioSpec]:
    return [load_spec(payload) for payload in builtin_payloads()]


def schema_table() -> Dict[str, Dict[str, Any]]:
    return {kind.value: {s.name: s.describe() for s in schema} for kind, schema in SCHEMAS.items()}
