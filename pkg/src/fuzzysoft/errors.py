"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError -> 1, DataError -> 2,
InternalError -> 3.
"""


class FuzzySoftError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FuzzySoftError):
    """Invalid configuration: bad flag values, unreadable spec files, unwritable output."""


class DataError(FuzzySoftError):
    """Invalid input data: missing columns, unparseable cells, unknown labels."""


class InternalError(FuzzySoftError):
    """An internal invariant was violated; indicates a bug, not bad input."""
