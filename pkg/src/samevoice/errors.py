"""Exception types shared across the package.

The CLI maps these onto exit codes: usage errors exit 1, DataError exits 2,
NumericalError exits 3.
"""


class DataError(ValueError):
    """Invalid or inconsistent input data (shapes, labels, file contents)."""


class NumericalError(FloatingPointError):
    """A computation produced NaN/Inf or was numerically unusable."""
