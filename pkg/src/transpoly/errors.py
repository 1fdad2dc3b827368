"""Exception types shared by all modules."""


class ValidationError(ValueError):
    """Malformed degree sequence, tree encoding or argument."""


class InstanceTooLarge(RuntimeError):
    """Exhaustive computation refused by a size guard."""

    def __init__(self, what: str, estimate: int, limit: int):
        self.estimate = estimate
        self.limit = limit
        super().__init__(
            f"instance too large for {what}: estimate {estimate} exceeds limit {limit}"
        )


class StructuralError(ValueError):
    """An object violates the structural invariants of its class."""


class IllegalMove(ValueError):
    """A pivot move cannot be applied at the given step."""

    def __init__(self, step: int, reason: str):
        self.step = step
        super().__init__(f"illegal move at step {step}: {reason}")


class BoundViolation(AssertionError):
    """A computed distance exceeds the 2(n-1) diameter bound.

    ``payload`` carries the offending object (a certificate or a diameter)
    so callers can inspect it.
    """

    def __init__(self, message: str, payload=None):
        self.payload = payload
        super().__init__(message)
