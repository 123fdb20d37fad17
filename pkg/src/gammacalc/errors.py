"""Exception hierarchy shared by all engines."""


class GammaCalcError(Exception):
    """Base class for every error raised by this package."""


class InvalidWindow(GammaCalcError):
    """A window overruns the slot range 1..n."""


class DegreeOutOfRange(GammaCalcError):
    """Some relation degree d_j violates 1 <= d_j <= n."""


class RingMismatch(GammaCalcError):
    """Chow classes live in different rings (num_slots or truncation differ)."""


class BadExponent(GammaCalcError):
    """Exponent vector has wrong length or out-of-range entries."""


class DefectMismatch(GammaCalcError):
    """Operation requires defect == n*(r-1)."""


class NotStable(GammaCalcError):
    """Operation requires the stable range n >= max(d)."""


class NegativeExpectedDim(GammaCalcError):
    """Operation requires expected dimension >= 0."""


class BadParameter(GammaCalcError):
    """Parameter outside the documented domain."""


class FieldMismatch(GammaCalcError):
    """Operands belong to different coefficient fields."""


class DimensionMismatch(GammaCalcError):
    """Vector lengths disagree (wrong number of generators)."""


class DegreeMismatch(GammaCalcError):
    """Relation degree does not match the window it is evaluated on."""


class ParseError(GammaCalcError):
    """Malformed relation or shape input."""


class InvalidWord(ParseError):
    """A tensor word uses a symbol outside the alphabet 1..r."""


class GeneralPositionUnreachable(GammaCalcError):
    """Sampling could not reach a general-position configuration."""


class GeneralPositionViolation(GammaCalcError):
    """Supplied linear forms are not in general position."""


class BudgetExceeded(GammaCalcError):
    """Exhaustive scan would exceed the configured budget."""
