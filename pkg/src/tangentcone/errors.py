class TangentConeError(Exception):
    pass


class InvalidGenerators(TangentConeError, ValueError):
    pass


class TableTooLarge(TangentConeError):
    pass


class TableRangeError(TangentConeError):
    pass


class BudgetExceeded(TangentConeError):
    pass


class PreconditionError(TangentConeError, ValueError):
    pass


class InvariantViolation(TangentConeError):
    """Two independent routes disagreed; always a bug, never auto-resolved."""
