"""Exception types raised across the package."""


class StrongDomError(Exception):
    """Base class for all package errors."""


class InvalidVertex(StrongDomError, IndexError):
    pass


class SelfLoopRejected(StrongDomError, ValueError):
    pass


class InvalidParameter(StrongDomError, ValueError):
    pass


class EdgeNotPresent(StrongDomError, ValueError):
    pass


class OracleTooLarge(StrongDomError):
    pass


class NoSetWithinCap(StrongDomError):
    pass


class HypothesisViolated(StrongDomError):
    """A theorem's precondition does not hold for the given instance."""


class InvalidWitness(StrongDomError, ValueError):
    pass


class ParseError(StrongDomError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
