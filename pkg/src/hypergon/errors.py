"""Exception types shared across the package."""


class DomainError(ValueError):
    """A formula argument lies outside its mathematical domain."""


class ParameterError(ValueError):
    """A check was configured with invalid parameters (bad grid, empty interval, ...)."""


class NoSignChangeError(ValueError):
    """Root bracketing failed: f(lo) and f(hi) do not have opposite signs."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration budget before meeting tolerance."""


class HypothesisError(ValueError):
    """The comparison polygon is acute, so the inequality is not claimed there."""


class StepAngleError(RuntimeError):
    """A merge step produced an interior angle below a right angle.

    On valid input this would contradict the certified angle bound, so it is
    an internal-consistency failure rather than a pass/fail verdict.
    """


class SideCountError(ValueError):
    """Partition side counts are inconsistent with a closed-surface decomposition."""


class GridEvaluationError(RuntimeError):
    """A grid certification could not evaluate its function at a sample point."""

    def __init__(self, x: float, cause: Exception):
        super().__init__(f"evaluation failed at sample point x={x!r}: {cause}")
        self.x = x
