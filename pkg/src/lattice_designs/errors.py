"""Exception types shared across the package."""


class LatticeDesignError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(LatticeDesignError, ArithmeticError):
    pass


class ParseError(LatticeDesignError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSimple(LatticeDesignError, ValueError):
    pass


class Disconnected(LatticeDesignError, ValueError):
    pass


class Exhausted(LatticeDesignError, RuntimeError):
    """The automorphism search hit its node budget."""


class UnequalNorms(LatticeDesignError, ValueError):
    pass


class DegenerateDimension(LatticeDesignError, ValueError):
    pass


class InvalidParam(LatticeDesignError, ValueError):
    pass


class NotPrimePower(InvalidParam):
    pass


class NotSymmetric(InvalidParam):
    pass


class UnknownName(LatticeDesignError, KeyError):
    pass


class UnknownTable(LatticeDesignError, KeyError):
    pass
