from enum import Enum, IntEnum
from fractions import Fraction
from typing import Any, List, Tuple, Union


class ScenarioKind(Enum):
    TORUS_DEGENERATION = "torus-degeneration"
    VOLUME_DEGENERATION = "volume-degeneration"
    LIE_DEGENERATION = "lie-degeneration"
    FRAMING_KERNEL = "framing-kernel"
    GENCONN_RIGIDITY = "genconn-rigidity"
    GL_STABILIZER = "gl-stabilizer"
    ORACLE_CROSSCHECK = "oracle-crosscheck"


class ChartKind(Enum):
    TORUS = "torus"
    VOLUME = "volume"
    LIE = "lie"


class OracleTarget(Enum):
    # which closed form an oracle-crosscheck scenario compares against
    TORUS_CHART = "torus"
    VOLUME_CHART = "volume"
    CONJUGATE = "conjugate"


class RingOp(Enum):
    ADD = "add"
    SUB = "sub"
    SCALE = "scale"
    MUL = "mul"


class GLSide(Enum):
    # RIGHT: j -> j o A (precomposition), LEFT: j -> A o j (postcomposition)
    RIGHT = "right"
    LEFT = "left"


class ReportFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class ExitCode(IntEnum):
    OK = 0
    FAILED = 1
    USAGE = 2


# Human-readable statement each scenario kind certifies; used by the text report
CERTIFIES = {
    ScenarioKind.TORUS_DEGENERATION: "no invariant rigid A-structure on the blown-up torus",
    ScenarioKind.VOLUME_DEGENERATION: "no invariant rigid A-structure on the volume-preserving modification",
    ScenarioKind.LIE_DEGENERATION: "no G-invariant rigid A-structure on the blown-up homogeneous space",
    ScenarioKind.FRAMING_KERNEL: "degenerate framings are (j,1)-almost rigid",
    ScenarioKind.GENCONN_RIGIDITY: "the canonical generalized connection is (1,2)-rigid",
    ScenarioKind.GL_STABILIZER: "the blow-down 2-jet has trivial GL(n) stabilizer",
    ScenarioKind.ORACLE_CROSSCHECK: "symbolic jets agree with numeric Taylor estimates",
}

# Monomial exponents, keyed graded-lexicographically repo-wide
MultiIndex = Tuple[int, ...]

# Coefficient values: an exact rational, or an element of a univariate rational function field
Scalar = Union[Fraction, Any]

# Dense row-major matrix of scalars
Matrix = List[List[Any]]
