"""Exception hierarchy.

Two families matter to callers (and to the CLI's exit codes): ``InputError``
covers malformed or out-of-domain inputs, ``NumericError`` covers inputs that
are structurally fine but defeat the numerics (singularity, failed
preconditions, non-convergence).
"""

from __future__ import annotations


class DmcError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DmcError):
    """Malformed or out-of-domain input (CLI exit code 2)."""


class NumericError(DmcError):
    """Numeric failure on structurally valid input (CLI exit code 3)."""


class NotSquare(InputError):
    pass


class RowSumViolation(InputError):
    def __init__(self, row: int, total: float):
        self.row = row
        self.total = total
        super().__init__(f"row {row} sums to {total!r}, expected 1 within 1e-9")


class NegativeEntry(InputError):
    def __init__(self, row: int, col: int, value: float):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"entry ({row}, {col}) = {value!r} is negative")


class MatrixFormatError(InputError):
    """Unparseable matrix file; message carries row/column location."""


class InvalidPmf(InputError):
    pass


class InvalidParameter(InputError):
    pass


class InvalidRange(InputError):
    pass


class TooLarge(InputError):
    def __init__(self, n: int, limit: int):
        self.n = n
        super().__init__(f"alphabet size {n} exceeds limit {limit}")


class SingularMatrix(NumericError):
    def __init__(self, pivot: float):
        self.pivot = pivot
        super().__init__(f"singular matrix: pivot magnitude {pivot:.3e} below 1e-12")


class ConvergenceFailure(NumericError):
    def __init__(self, sweeps: int):
        self.sweeps = sweeps
        super().__init__(f"eigen-iteration did not converge within {sweeps} sweeps")


class NotPositive(NumericError):
    pass


class PreconditionNotMet(NumericError):
    pass


class NotConverged(NumericError):
    """Iteration hit its cap; the best estimate rides along on the error."""

    def __init__(self, iterations: int, gap: float, estimate):
        self.iterations = iterations
        self.gap = gap
        self.estimate = estimate
        super().__init__(
            f"not converged after {iterations} iterations (gap {gap:.3e} bits)"
        )
