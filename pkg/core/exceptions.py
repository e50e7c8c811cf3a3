"""
Error hierarchy shared by every app.

Each exception carries the process exit code the management commands use
when the error reaches the command line.
"""


class DrinfeldError(Exception):
    """Base class for all computation errors."""

    exit_code = 1

    def __init__(self, message="", **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        if not self.context:
            return self.message
        details = ", ".join(f"{key}={value}" for key, value in self.context.items())
        return f"{self.message} ({details})"


class InvalidFieldSpec(DrinfeldError):
    """p is not prime or g is not monic irreducible over F_p."""


class FieldMismatch(DrinfeldError):
    """Operands live over different finite fields."""


class DivisionByZero(DrinfeldError):
    pass


class ZeroValuation(DrinfeldError):
    """The valuation of the exact zero element was requested."""


class ZeroClass(DrinfeldError):
    """An invariant of the zero class was requested."""


class NotAUnit(DrinfeldError):
    """A tau-series with non-unit constant coefficient was inverted."""


class NotADrinfeldModule(DrinfeldError):
    pass


class InvalidLattice(DrinfeldError):
    """A lattice generator is not a nonzero element of K with v < 0."""


class BadReduction(DrinfeldError):
    """The leading coefficient of psi_t lies in the maximal ideal."""


class RankInconsistent(DrinfeldError):
    exit_code = 2


class PrecisionExhausted(DrinfeldError):
    exit_code = 3


class NonConvergence(DrinfeldError):
    """A Hensel loop ran past its iteration budget."""

    exit_code = 3


class ResidualTooLarge(DrinfeldError):
    exit_code = 4


class CancellationWarning(UserWarning):
    """Completeness of a truncated lattice could not be certified."""
