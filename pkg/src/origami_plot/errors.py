"""Exception hierarchy shared by the geometry, I/O, CLI and HTTP layers.

Every error carries a stable machine-readable ``code`` (SCREAMING_SNAKE) so
the HTTP API can mirror exception names into JSON error payloads and the CLI
can print uniform diagnostics.
"""


class OrigamiError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "ERROR"


class MissingValueError(OrigamiError):
    """A cell is empty, non-numeric or non-finite."""

    code = "MISSING_VALUE"


class OutOfRangeError(OrigamiError):
    """A value lies outside [0, scale_max]."""

    code = "OUT_OF_RANGE"


class TooFewAttributesError(OrigamiError):
    """Fewer than 3 attribute columns."""

    code = "TOO_FEW_ATTRIBUTES"


class DuplicateNameError(OrigamiError):
    """Repeated object or attribute name."""

    code = "DUPLICATE_NAME"


class AuxiliaryUnspecifiedError(OrigamiError):
    """Dataset minimum is 0, so the auxiliary radius must be given explicitly."""

    code = "AUX_UNSPECIFIED"


class NonPositiveAuxError(OrigamiError):
    """Auxiliary radius must be strictly positive."""

    code = "NON_POSITIVE_AUX"


class NonPositiveWeightError(OrigamiError):
    """Weights must all be strictly positive."""

    code = "NON_POSITIVE_WEIGHT"


class WeightSumError(OrigamiError):
    """Weights must sum to 1 within 1e-9."""

    code = "WEIGHT_SUM"


class LengthMismatchError(OrigamiError):
    """A vector's length does not match the attribute count."""

    code = "LENGTH_MISMATCH"


class UnknownObjectError(OrigamiError):
    """Requested object name is not in the dataset."""

    code = "UNKNOWN_OBJECT"


class SameObjectError(OrigamiError):
    """Pairwise comparison needs two distinct objects."""

    code = "SAME_OBJECT"


class CanvasTooSmallError(OrigamiError):
    """Canvas below the 100x100 px minimum."""

    code = "CANVAS_TOO_SMALL"


class UnsupportedSymbolError(OrigamiError):
    """Point symbol code other than 16 (filled circle) or 32 (none)."""

    code = "UNSUPPORTED_SYMBOL"


class InvalidOptionError(OrigamiError):
    """A rendering option violates its constraints."""

    code = "INVALID_OPTION"


class RaggedRowError(OrigamiError):
    """CSV row with the wrong number of cells."""

    code = "RAGGED_ROW"


class EmptyInputError(OrigamiError):
    """CSV input with no data rows."""

    code = "EMPTY_INPUT"
