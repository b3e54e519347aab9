"""Exception hierarchy shared by every module of the package."""


class KPathError(Exception):
    """Base class for all errors raised by kpath_nfa."""


class ParseError(KPathError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(KPathError, ValueError):
    pass


class PreconditionError(KPathError, ValueError):
    pass


class BudgetError(KPathError):
    """Raised when a construction or exhaustive check would exceed its budget.

    ``estimate`` carries the projected cost so callers can report it.
    """

    def __init__(self, message, estimate=None, budget=None):
        self.estimate = estimate
        self.budget = budget
        super().__init__(message)


class StructureError(KPathError):
    pass


class CycleError(StructureError):
    def __init__(self, message, cycle=()):
        self.cycle = tuple(cycle)
        super().__init__(message)


class NegativeCycleError(KPathError):
    def __init__(self, message, cycle=()):
        self.cycle = tuple(cycle)
        super().__init__(message)


class ValidationError(KPathError):
    """A returned witness failed independent validation (an internal bug)."""
