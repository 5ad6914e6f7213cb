"""Exception hierarchy shared by every module of the package."""


class PatternError(Exception):
    """Base class for all errors raised by ecpatterns."""


class ZeroPolynomial(PatternError):
    pass


class SingularMap(PatternError):
    pass


class SingularCurve(PatternError):
    pass


class NotOnCurve(PatternError):
    def __init__(self, x, y, residual):
        self.x, self.y, self.residual = x, y, residual
        super().__init__(f"point ({x}, {y}) is not on the curve (residual {residual})")


class GeneratorNotOnCurve(NotOnCurve):
    pass


class EmptySet(PatternError):
    pass


class ZeroShift(PatternError):
    pass


class BadRatio(PatternError):
    pass


class ParseError(PatternError):
    pass


class VerificationFailed(PatternError):
    pass


class NetworkError(PatternError):
    pass


class UnknownLabel(PatternError):
    pass


class SchemaMismatch(PatternError):
    pass
