"""Exception types shared across the package."""


class CDSError(Exception):
    pass


class InvalidVertex(CDSError, ValueError):
    pass


class SelfLoopRejected(CDSError, ValueError):
    pass


class Unreachable(CDSError):
    pass


class NonmonotoneProfit(CDSError, ValueError):
    pass


class Infeasible(CDSError):
    """No connected vertex set reaches the requested quota."""


class InfeasibleQuota(Infeasible):
    pass


class TooSmall(CDSError, ValueError):
    pass


class BudgetTooSmall(CDSError, ValueError):
    pass


class TooLarge(CDSError, ValueError):
    """Input exceeds the size cap of an exhaustive routine."""


class ParseError(CDSError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
