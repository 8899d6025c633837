"""Exception hierarchy shared by all dp1 modules."""


class Dp1Error(Exception):
    """Base class for every error raised by dp1."""


class ParseError(Dp1Error, ValueError):
    pass


class NotPrime(Dp1Error, ValueError):
    pass


class Reducible(Dp1Error, ValueError):
    pass


class DivisionByZero(Dp1Error, ZeroDivisionError):
    pass


class SpecMismatch(Dp1Error, TypeError):
    """Operands live in different fields."""


class NotExceptional(Dp1Error, ValueError):
    pass


class SearchExhausted(Dp1Error, RuntimeError):
    pass


class TypeMismatch(Dp1Error, ValueError):
    """Two cliques do not share the same weight pattern."""


class BadArity(Dp1Error, ValueError):
    pass


class NoCurve(Dp1Error, ValueError):
    pass


class NotUnique(Dp1Error, ValueError):
    def __init__(self, dimension: int, message: str = ""):
        self.dimension = dimension
        super().__init__(message or f"solution space has dimension {dimension}")


class HypothesisViolated(Dp1Error, ValueError):
    pass


class GeneralPositionError(Dp1Error, ValueError):
    """Raised when an operation that needs general position meets a violation."""

    def __init__(self, violation, message: str = ""):
        self.violation = violation
        super().__init__(message or f"configuration not in general position: {violation}")


class RootNotFound(Dp1Error, LookupError):
    pass


class DegenerateSample(Dp1Error, RuntimeError):
    pass


class NonlinearInSolveVariable(Dp1Error, ValueError):
    pass


class RatioNotConstant(Dp1Error, AssertionError):
    pass


class FixtureMismatch(Dp1Error, AssertionError):
    def __init__(self, message: str, diff=None):
        self.diff = diff
        super().__init__(message)
