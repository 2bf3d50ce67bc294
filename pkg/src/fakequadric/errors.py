"""Exception types raised by the library; ``code`` is the machine-readable name."""


class FakeQuadricError(ValueError):
    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class NonIntegralAlpha(FakeQuadricError):
    code = "NonIntegralAlpha"


class NonCoprimePair(FakeQuadricError):
    code = "NonCoprimePair"


class InvalidOrder(FakeQuadricError):
    code = "InvalidOrder"


class UnknownCurve(FakeQuadricError):
    code = "UnknownCurve"


class NotLinearlyEquivalent(FakeQuadricError):
    code = "NotLinearlyEquivalent"


class SlantedUnsupported(FakeQuadricError):
    code = "SlantedUnsupported"


class NotHorizontal(FakeQuadricError):
    code = "NotHorizontal"


class RestrictionError(FakeQuadricError):
    code = "RestrictionError"


class DegreeBoundExceeded(FakeQuadricError):
    code = "DegreeBoundExceeded"


class InvalidLYInput(FakeQuadricError):
    code = "InvalidLYInput"


class AlphaNotZero(FakeQuadricError):
    code = "AlphaNotZero"


class LcmMismatch(FakeQuadricError):
    code = "LcmMismatch"


class SchemaError(FakeQuadricError):
    code = "SchemaError"


class InvalidCover(FakeQuadricError):
    code = "InvalidCover"


class ComponentCountAmbiguous(FakeQuadricError):
    code = "ComponentCountAmbiguous"
