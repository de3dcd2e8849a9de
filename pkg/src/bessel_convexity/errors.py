"""Exception hierarchy shared by all modules."""


class BesselConvexityError(Exception):
    """Base class for library errors."""


class DomainError(BesselConvexityError, ValueError):
    """An argument lies outside the admissible window (order, alpha, point)."""


class ConvergenceError(BesselConvexityError, ArithmeticError):
    """A series or iteration did not converge within its budget."""


class BracketError(BesselConvexityError, RuntimeError):
    """A root bracket could not be established."""


class PoleProximityError(BesselConvexityError, ArithmeticError):
    """Evaluation requested at (or numerically on top of) a pole."""
