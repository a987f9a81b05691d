"""Package exception hierarchy.

Errors fall into two branches the CLI cares about: ``InputError`` for bad
files, labels, or parameters (exit code 2) and ``DegeneracyError`` for
quantities that must be nonzero or finite but are not (exit code 3).
"""


class TsdissimError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TsdissimError):
    """Invalid input data, parameters, or configuration."""


class DegeneracyError(TsdissimError):
    """Numeric degeneracy encountered during computation."""


# input contract violations


class LengthMismatchError(InputError):
    """Two series that must share a length do not."""


class LabelNotFoundError(InputError):
    """A referenced series label is absent."""


class DuplicateLabelError(InputError):
    """Two series in one corpus carry the same label."""


class MissingValueError(InputError):
    """A CSV cell is empty or not a finite number (values are never imputed)."""


class NonContiguousPeriodsError(InputError):
    """Period labels do not form a gap-free ascending run."""


class EmptyCorpusError(InputError):
    """An operation received a corpus with no series."""


class InvalidKError(InputError):
    """Requested cluster count lies outside 1..n."""


class IndexOutOfRangeError(InputError):
    """A cut position lies outside the series."""


class TooFewSeriesError(InputError):
    """Clustering needs at least two series."""


class DelayOutOfRangeError(InputError):
    """The delayed window would run past the end of the series."""


class SeriesTooShortError(InputError):
    """The series is shorter than the operation requires."""


class RegimeNotAllowedError(InputError):
    """Perturbation regime incompatible with the corpus value mode."""


class ConfigError(InputError):
    """Malformed configuration file or flag value."""


# numeric degeneracies


class DegenerateSeriesError(DegeneracyError):
    """A constructed series would have fewer than two points."""


class ConstantSeriesError(DegeneracyError):
    """A series with zero variance where variation is required."""


class ZeroPowerError(DegeneracyError):
    """A periodogram with zero total power cannot be normalized."""


class ZeroDenominatorError(DegeneracyError):
    """Percentage change over a zero value."""


class DegenerateRatioError(DegeneracyError):
    """The base-to-warped distance in a quality ratio is zero."""


class CompressionError(DegeneracyError):
    """The compressor failed on a serialized series."""
