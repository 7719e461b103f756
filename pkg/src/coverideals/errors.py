"""Exceptions shared across the package."""


class BudgetExceeded(Exception):
    """A configured node/size budget ran out before the computation finished."""

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


class TraceInvalid(ValueError):
    """A reduction trace violates one of its preconditions at a given step."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class MovePatternExhausted(ValueError):
    """The supplied move pattern ran out before the reduction terminated."""


class InternalCheckFailed(RuntimeError):
    """Two independent implementations of the same predicate disagree."""
