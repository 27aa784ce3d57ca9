"""Exception hierarchy shared by all chaosmark modules."""


class ChaosmarkError(ValueError):
    """Base class for all chaosmark validation and precondition errors."""


class DimensionError(ChaosmarkError):
    """Operands have incompatible cell counts or truncation lengths."""


class CellRangeError(ChaosmarkError):
    """A cell index or digit is outside [0, n_cells - 1]."""


class DomainError(ChaosmarkError):
    """A scalar argument is outside the operation's domain."""


class ExhaustedStrategyError(ChaosmarkError):
    """An iteration needed a strategy term past the stored truncation."""


class ExhaustedDigitsError(ChaosmarkError):
    """A real-map step needed a fractional digit past the stored truncation."""


class NormalizationError(ChaosmarkError):
    """The digit representation is non-canonical and cannot be decoded."""


class CrossBoundaryError(ChaosmarkError):
    """A slope was requested across two distinct linearity intervals."""


class DegeneratePairError(ChaosmarkError):
    """A slope was requested for two equal points."""


class ExceptionalOrbitError(ChaosmarkError):
    """An orbit landed on a grid point where the real map is not differentiable."""

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"orbit hits a non-differentiable grid point at step {step}")


class DegenerateRunError(ChaosmarkError):
    """Every step of a numerical estimate was skipped; no data to average."""


class CapacityError(ChaosmarkError):
    """The requested payload or selection exceeds the image capacity."""


class PgmFormatError(ChaosmarkError):
    """The input is not a binary 8-bit PGM this package can handle."""
