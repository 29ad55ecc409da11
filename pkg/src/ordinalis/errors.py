"""Exception and warning types shared across the package."""


class OrdinalisError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(OrdinalisError):
    """Input data is malformed (non-finite values, inconsistent shapes)."""


class DimensionMismatchError(OrdinalisError):
    """A value window does not match the configured embedding dimension."""


class InvalidPermutationError(OrdinalisError):
    """A rank tuple is not a permutation of 0..D-1."""


class InsufficientDataError(OrdinalisError):
    """Series too short (or too sparse) for the requested operation."""


class InvalidPdfError(OrdinalisError):
    """Probability vector is not a valid distribution."""


class InvalidParameterError(OrdinalisError):
    """Configuration parameter outside its allowed range."""


class MissingColumnError(OrdinalisError):
    """A named column is absent from the input file."""


class NoParseableRowsError(OrdinalisError):
    """No row of the input file yielded a usable value."""


class ShortSeriesWarning(UserWarning):
    """Series length is small relative to the number of ordinal states."""
