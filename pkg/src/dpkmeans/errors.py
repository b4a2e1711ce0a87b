"""Exception types shared across the package."""


class DpkmeansError(Exception):
    """Base class for errors raised by this package."""


class DataError(DpkmeansError):
    """Bad input data: unreadable files, parse failures, broken invariants."""


class AlgorithmError(DpkmeansError):
    """Degenerate algorithmic situation: zero truncation distance, empty
    rectangle selection, no visible jump in the ranked gamma values."""
