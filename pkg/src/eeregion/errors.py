"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ValidationError(ValueError):
    """A configuration or parameter bundle violates its invariants."""


class BracketError(ValueError):
    """A root bracket does not enclose a sign change."""


class ConvergenceError(RuntimeError):
    """An iterative method exhausted its budget.

    Carries the best iterate found so far in ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class SolverError(RuntimeError):
    """The embedded convex subproblem solver failed; message carries a trace."""


class NoBackscatterLink(ValueError):
    """The backscatter channel is identically zero."""


class InfeasibleStart(ValueError):
    """The provided starting beamformer is not strictly feasible."""
