from typing import Any, Dict, Optional


class JetError(Exception):
    def __init__(self, message: str = "Jet computation error"):
        self.message = message
        super().__init__(self.message)

    def to_payload(self) -> Dict[str, Any]:
        return {"error": self.message, "kind": type(self).__name__}


class DimensionMismatch(JetError):
    pass


class OrderMismatch(JetError):
    pass


class VariableMismatch(JetError):
    pass


class FieldMismatch(JetError):
    pass


class NonZeroConstantTerm(JetError):
    pass


class SingularLinearPart(JetError):
    pass


class ParameterRequired(JetError):
    pass


class InvalidModel(JetError):
    pass


class SettingsError(JetError):
    pass


class ScenarioSpecError(JetError):
    """
    Raised while loading a scenario file. `field` names the offending key so the
    diagnostic can point at it.
    """

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        self.detail = message
        super().__init__(f"{field}: {message}" if field else message)

    def to_payload(self) -> Dict[str, Any]:
        payload = super().to_payload()
        payload["field"] = self.field
        return payload


class MathematicalFailure(JetError):
    """
    Base for outcomes that refute an expected property. Scenario runners turn these
    into failing reports instead of crashing.
    """


class PoleAtZero(MathematicalFailure):
    pass


class DirectionConditionFailed(MathematicalFailure):
    pass


class UnresolvedSystem(MathematicalFailure):
    pass


class OracleFailure(MathematicalFailure):
    pass
