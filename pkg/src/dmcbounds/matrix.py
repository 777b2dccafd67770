"""Validated row-stochastic matrices and their linear-algebra diagnostics.

A channel matrix A is square with A[i][j] = P(output j | input i), so every
row is a probability vector. Everything downstream (closed-form bounds,
reference capacities) consumes the ``ChannelMatrix`` produced by
``validate_channel`` or the bundled ``InverseAnalysis`` diagnostics:

- inverse of A (LU with partial pivoting, singular pivot threshold 1e-12);
- Gershgorin ratios c_i = A_ii / sum of off-diagonal row entries, and their
  minimum c_min (+inf when every off-diagonal sum is zero);
- minimum singular value, via cyclic Jacobi iteration on A^T A;
- row entropies in bits and their maximum.

All logarithms are base 2 and 0*log(0) = 0 throughout.
"""

from __future__ import annotations

import io
import math
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    ConvergenceFailure,
    InvalidPmf,
    MatrixFormatError,
    NegativeEntry,
    NotSquare,
    RowSumViolation,
    SingularMatrix,
)

ROW_SUM_TOL = 1e-9
NEGATIVE_CLAMP = 1e-12
PIVOT_TOL = 1e-12
DOMINANCE_MARGIN = 1e-12
JACOBI_OFF_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class ChannelMatrix:
    """Validated square row-stochastic matrix. Construct via validate_channel."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class InverseAnalysis:
    """Inverse of a channel matrix plus the diagnostics derived from A itself."""

    inverse: np.ndarray
    is_positive: bool
    is_sdd: bool
    gershgorin_ratios: np.ndarray
    c_min: float
    sigma_min: float
    row_entropies: np.ndarray
    h_max: float


def entropy_bits(v: np.ndarray) -> float:
    """Shannon entropy of a nonnegative vector in bits; terms <= 0 contribute 0."""
    v = np.asarray(v, dtype=float)
    pos = v > 0.0
    return float(-(v[pos] * np.log2(v[pos])).sum())


def validate_channel(raw) -> ChannelMatrix:
    """Check squareness, nonnegativity and row stochasticity of a raw array.

    Entries in [-1e-12, 0) are clamped to zero; everything else is preserved
    bit-exactly. Raises NotSquare, NegativeEntry or RowSumViolation.
    """
    try:
        entries = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise NotSquare(f"expected a square numeric matrix: {exc}") from None
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {entries.shape}")
    n = entries.shape[0]
    if n < 2:
        raise NotSquare(f"alphabet size must be at least 2, got {n}")
    for i in range(n):
        for j in range(n):
            v = entries[i, j]
            if v < 0.0:
                if v >= -NEGATIVE_CLAMP:
                    entries[i, j] = 0.0
                else:
                    raise NegativeEntry(i, j, v)
    sums = entries.sum(axis=1)
    for i in range(n):
        if abs(sums[i] - 1.0) > ROW_SUM_TOL:
            raise RowSumViolation(i, float(sums[i]))
    entries.setflags(write=False)
    return ChannelMatrix(entries)


def invert(matrix: ChannelMatrix) -> np.ndarray:
    """Inverse of the channel matrix by LU with partial pivoting.

    Raises SingularMatrix when any pivot magnitude falls below 1e-12.
    """
    a = np.array(matrix.entries, dtype=float)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # scipy warns on exact zero pivots
        lu, piv = scipy.linalg.lu_factor(a)
    pivots = np.abs(np.diag(lu))
    if pivots.min() < PIVOT_TOL:
        raise SingularMatrix(float(pivots.min()))
    return scipy.linalg.lu_solve((lu, piv), np.eye(matrix.n))


def gershgorin(matrix: ChannelMatrix) -> tuple[np.ndarray, float]:
    """Per-row Gershgorin ratios and their minimum.

    The radius is the exact off-diagonal row sum (not 1 - A_ii, which loses
    digits for diagonals near 1). A zero radius yields an infinite ratio.
    """
    a = matrix.entries
    diag = np.diag(a)
    radii = a.sum(axis=1) - diag
    with np.errstate(divide="ignore"):
        ratios = np.where(radii > 0.0, diag / np.where(radii > 0.0, radii, 1.0), np.inf)
    return ratios, float(ratios.min())


def min_singular_value(matrix: ChannelMatrix) -> float:
    """Minimum singular value of A: cyclic Jacobi iteration on A^T A.

    Sweeps until the off-diagonal Frobenius norm drops below 1e-12, at most
    100 sweeps; raises ConvergenceFailure beyond that.
    """
    a = matrix.entries
    b = a.T @ a
    n = b.shape[0]

    def off_norm(m: np.ndarray) -> float:
        # summing the squared off-diagonal directly; subtracting diagonal
        # squares from the total cancels catastrophically near convergence
        off = m.copy()
        np.fill_diagonal(off, 0.0)
        return math.sqrt(float((off * off).sum()))

    sweeps = 0
    while off_norm(b) > JACOBI_OFF_TOL:
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise ConvergenceFailure(sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                bpq = b[p, q]
                if abs(bpq) <= JACOBI_OFF_TOL / (4.0 * n * n):
                    continue
                tau = (b[q, q] - b[p, p]) / (2.0 * bpq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp, rq = b[p, :].copy(), b[q, :].copy()
                b[p, :] = c * rp - s * rq
                b[q, :] = s * rp + c * rq
                cp, cq = b[:, p].copy(), b[:, q].copy()
                b[:, p] = c * cp - s * cq
                b[:, q] = s * cp + c * cq
                b[p, q] = 0.0
                b[q, p] = 0.0
    return math.sqrt(max(float(np.diag(b).min()), 0.0))


def row_entropies(matrix: ChannelMatrix) -> tuple[np.ndarray, float]:
    """Entropy of each row in bits, and the maximum over rows."""
    ent = np.array([entropy_bits(row) for row in matrix.entries])
    return ent, float(ent.max())


def analyze_inverse(matrix: ChannelMatrix) -> InverseAnalysis:
    """Bundle the inverse with positivity/dominance flags and all diagnostics."""
    a = matrix.entries
    diag = np.diag(a)
    off = a.sum(axis=1) - diag
    ratios, c_min = gershgorin(matrix)
    ent, h_max = row_entropies(matrix)
    return InverseAnalysis(
        inverse=invert(matrix),
        is_positive=bool(a.min() > 0.0),
        is_sdd=bool(((diag - off) > DOMINANCE_MARGIN).all()),
        gershgorin_ratios=ratios,
        c_min=c_min,
        sigma_min=min_singular_value(matrix),
        row_entropies=ent,
        h_max=h_max,
    )


def mutual_information(matrix: ChannelMatrix, p) -> float:
    """I(X;Y) in bits for input pmf p: H(A^T p) minus the p-weighted row entropy."""
    p = np.asarray(p, dtype=float)
    if p.shape != (matrix.n,):
        raise InvalidPmf(f"pmf must have shape ({matrix.n},), got {p.shape}")
    if p.min() < -ROW_SUM_TOL:
        raise InvalidPmf(f"pmf has negative entry {p.min()!r}")
    if abs(p.sum() - 1.0) > ROW_SUM_TOL:
        raise InvalidPmf(f"pmf sums to {p.sum()!r}")
    q = matrix.entries.T @ p
    ent, _ = row_entropies(matrix)
    return entropy_bits(q) - float(p @ ent)


def load_matrix_csv(source) -> ChannelMatrix:
    """Read the shared matrix CSV format (n lines of n comma-separated reals).

    ``source`` is a path or a text stream. Parse errors carry 1-based
    row/column locations.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty matrix file")
    rows = []
    for r, line in enumerate(lines):
        fields = line.split(",")
        row = []
        for c, field in enumerate(fields):
            try:
                row.append(float(field))
            except ValueError:
                raise MatrixFormatError(
                    f"row {r + 1}, column {c + 1}: cannot parse {field.strip()!r}"
                ) from None
        rows.append(row)
    width = len(rows[0])
    for r, row in enumerate(rows):
        if len(row) != width:
            raise NotSquare(f"row {r + 1} has {len(row)} fields, expected {width}")
    return validate_channel(rows)


def dump_matrix_csv(matrix: ChannelMatrix, dest=None) -> str:
    """Write the matrix in the shared CSV format at 17 significant digits.

    Returns the text; if ``dest`` (path or stream) is given, also writes it.
    """
    buf = io.StringIO()
    for row in matrix.entries:
        buf.write(",".join(format(v, ".17g") for v in row))
        buf.write("\n")
    text = buf.getvalue()
    if dest is not None:
        if hasattr(dest, "write"):
            dest.write(text)
        else:
            with open(dest, "w", encoding="ascii") as fh:
                fh.write(text)
    return text
