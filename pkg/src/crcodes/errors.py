"""Exception hierarchy shared by every module."""


class CodeError(Exception):
    """Base class for all library errors."""


class NotPrime(CodeError, ValueError):
    pass


class ReducibleModulus(CodeError, ValueError):
    pass


class UnsupportedOrder(CodeError, ValueError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class FieldMismatch(CodeError, ValueError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class ZeroCode(CodeError, ValueError):
    """The requested code would have dimension 0."""


class FullSpace(CodeError, ValueError):
    """A parity-check matrix of rank 0 was supplied."""


class ZeroVector(CodeError, ValueError):
    pass


class BudgetExceeded(CodeError, RuntimeError):
    """An exhaustive enumeration would exceed its configured limit."""

    def __init__(self, what, size, limit, kind=None):
        label = f"{kind} budget" if kind else "budget"
        super().__init__(f"{what}: {size} exceeds {label} {limit}")
        self.kind = kind
        self.what = what
        self.size = size
        self.limit = limit


class Indeterminate(CodeError):
    """A generated-subgroup orbit count could not decide complete transitivity."""

    def __init__(self, orbits, expected):
        super().__init__(f"generated subgroup has {orbits} coset orbits, expected {expected}")
        self.orbits = orbits
        self.expected = expected


class NotARepeat(CodeError, ValueError):
    pass


class WholeSpace(CodeError, ValueError):
    pass


class MinDistanceNotOne(CodeError, ValueError):
    pass


class PreconditionViolated(CodeError, ValueError):
    pass


class InternalContradiction(CodeError, AssertionError):
    pass


class NotClassified(CodeError, ValueError):
    pass
