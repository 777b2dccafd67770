"""Closed-form capacity upper bound and its exactness conditions.

For an invertible positive channel matrix A, stationarity of the mutual
information in the output distribution q gives a closed form: with
K_j = sum_i inv(A)[j][i] * H(A_i) (row entropies propagated through the
inverse), the optimizing output pmf is

    q*_j = 2^(-K_j) / sum_i 2^(-K_i),

the matching input is p* = inv(A)^T q* (rows of inv(A) sum to 1, so p* sums
to 1 but may go negative), and

    C <= H(q*) + sum_ij p*_i A_ij log2 A_ij.

When p* is a valid pmf the bound is the capacity. Four sufficient conditions
certify that, ordered from sharpest to cheapest to evaluate:

- feasibility condition: every column ratio of inv(A)^T dominates
  (n-1) * 2^(K_max - K_min), which forces p* >= 0 directly;
- spectral condition: a test on c_min, sigma_min and H_max alone;
- coarse condition: the spectral test with H_max replaced by log2(n) and the
  c_min/(c_min-1) root exponent dropped;
- Gershgorin condition: the spectral test with sigma_min and H_max replaced
  by surrogates computed from c_min only (sigma* lower-bounds sigma_min,
  H*_max upper-bounds H_max).

Every inequality is evaluated in the log2 domain; the raw powers overflow
doubles for modest n. Checks return a tri-state so "hypothesis violated"
(not strictly diagonally dominant positive) stays distinguishable from
"inequality fails".
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPositive, PreconditionNotMet
from .formatting import fmt, fmt_vector
from .matrix import ChannelMatrix, InverseAnalysis, analyze_inverse, entropy_bits, invert

FEASIBILITY_TOL = -1e-10


class Condition(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    PRECONDITION_NOT_MET = "precondition-not-met"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class BoundReport:
    """Closed-form bound value plus every exactness diagnostic.

    sigma_star, h_max_star and root_exponent are NaN when the matrix is not
    strictly diagonally dominant positive (the surrogates assume it).
    """

    inverse_entropies: np.ndarray
    q_star: np.ndarray
    p_star: np.ndarray
    upper_bound: float
    p_star_feasible: bool
    feasibility_condition: Condition
    spectral_condition: Condition
    coarse_condition: Condition
    gershgorin_condition: Condition
    sigma_star: float
    h_max_star: float
    root_exponent: float
    analysis: InverseAnalysis

    @property
    def n(self) -> int:
        return len(self.q_star)

    def to_text(self) -> str:
        """Flat key-value block, one field per line."""
        lines = [
            f"n: {self.n}",
            f"upper_bound: {fmt(self.upper_bound)}",
            f"feasible: {fmt(self.p_star_feasible)}",
            f"feasibility_condition: {self.feasibility_condition}",
            f"spectral_condition: {self.spectral_condition}",
            f"coarse_condition: {self.coarse_condition}",
            f"gershgorin_condition: {self.gershgorin_condition}",
            f"c_min: {fmt(self.analysis.c_min)}",
            f"sigma_min: {fmt(self.analysis.sigma_min)}",
            f"sigma_star: {fmt(self.sigma_star)}",
            f"h_max: {fmt(self.analysis.h_max)}",
            f"h_max_star: {fmt(self.h_max_star)}",
            f"root_exponent: {fmt(self.root_exponent)}",
            f"inverse_entropies: {fmt_vector(self.inverse_entropies)}",
            f"q_star: {fmt_vector(self.q_star)}",
            f"p_star: {fmt_vector(self.p_star)}",
        ]
        return "\n".join(lines)

    def to_csv_row(self) -> str:
        """One CSV row: n, upper_bound, feasible, the four condition states
        (feasibility, spectral, coarse, Gershgorin), c_min, sigma_min,
        sigma_star, h_max, h_max_star, then q*_1..n and p*_1..n."""
        cells = [
            str(self.n),
            fmt(self.upper_bound),
            fmt(self.p_star_feasible),
            str(self.feasibility_condition),
            str(self.spectral_condition),
            str(self.coarse_condition),
            str(self.gershgorin_condition),
            fmt(self.analysis.c_min),
            fmt(self.analysis.sigma_min),
            fmt(self.sigma_star),
            fmt(self.analysis.h_max),
            fmt(self.h_max_star),
        ]
        cells.extend(fmt(float(x)) for x in self.q_star)
        cells.extend(fmt(float(x)) for x in self.p_star)
        return ",".join(cells)


def inverse_row_entropies(matrix: ChannelMatrix, analysis: InverseAnalysis) -> np.ndarray:
    """K_j = sum_i inv(A)[j][i] * H(A_i), in bits. Requires a positive matrix."""
    if not analysis.is_positive:
        raise NotPositive("inverse row entropies require a strictly positive matrix")
    return analysis.inverse @ analysis.row_entropies


def optimal_output_distribution(k: np.ndarray) -> np.ndarray:
    """Softmax of -K. Shifting by K_min first keeps the powers in range;
    the ratio is invariant under adding any constant to K."""
    k = np.asarray(k, dtype=float)
    w = np.exp2(-(k - k.min()))
    return w / w.sum()


def back_projected_input(matrix: ChannelMatrix, q_star: np.ndarray) -> np.ndarray:
    """p* = inv(A)^T q*. Sums to 1 by construction; entries may be negative."""
    return invert(matrix).T @ np.asarray(q_star, dtype=float)


def _inverse_column_ratios(inverse: np.ndarray) -> np.ndarray:
    """Diagonal of inv(A) over the absolute off-diagonal column sums."""
    n = inverse.shape[0]
    diag = np.diag(inverse)
    col_off = np.abs(inverse).sum(axis=0) - np.abs(diag)
    with np.errstate(divide="ignore"):
        return np.where(col_off > 0.0, diag / np.where(col_off > 0.0, col_off, 1.0), np.inf)


def check_feasibility_condition(
    matrix: ChannelMatrix, analysis: InverseAnalysis, k: np.ndarray
) -> Condition:
    """Holds when every inverse column ratio is at least (n-1)*2^(K_max-K_min),
    which certifies p* >= 0 entrywise."""
    if not (analysis.is_positive and analysis.is_sdd):
        return Condition.PRECONDITION_NOT_MET
    n = matrix.n
    spread = float(k.max() - k.min())
    ratios = _inverse_column_ratios(analysis.inverse)
    rhs = math.log2(n - 1) + spread
    ok = all(math.isinf(r) or (r > 0 and math.log2(r) >= rhs) for r in ratios)
    return Condition.HOLDS if ok else Condition.FAILS


def check_spectral_condition(
    matrix: ChannelMatrix, analysis: InverseAnalysis
) -> tuple[Condition, float]:
    """Test (1/V)*log2((c_min-1)/(n-1)^2) >= n*H_max/sigma_min with
    V = c_min/(c_min-1). Returns the tri-state and V (NaN if unavailable)."""
    if not (analysis.is_positive and analysis.is_sdd and analysis.c_min > 1.0):
        return Condition.PRECONDITION_NOT_MET, math.nan
    n = matrix.n
    c = analysis.c_min
    v = c / (c - 1.0)
    lhs = (1.0 / v) * math.log2((c - 1.0) / (n - 1) ** 2)
    rhs = n * analysis.h_max / analysis.sigma_min
    return (Condition.HOLDS if lhs >= rhs else Condition.FAILS), v


def check_coarse_condition(matrix: ChannelMatrix, analysis: InverseAnalysis) -> Condition:
    """Cruder variant: log2((c_min-1)/(n-1)^2) >= 2*n*log2(n)/sigma_min."""
    if not (analysis.is_positive and analysis.is_sdd and analysis.c_min > 1.0):
        return Condition.PRECONDITION_NOT_MET
    n = matrix.n
    lhs = math.log2((analysis.c_min - 1.0) / (n - 1) ** 2)
    rhs = 2.0 * n * math.log2(n) / analysis.sigma_min
    return Condition.HOLDS if lhs >= rhs else Condition.FAILS


def spectral_surrogates(
    matrix: ChannelMatrix, analysis: InverseAnalysis
) -> tuple[float, float]:
    """sigma* = (c_min - n/2)/(c_min + 1), a lower bound on sigma_min, and
    H*_max = log2(c_min+1) + (log2(n-1) - c_min*log2(c_min))/(c_min+1), an
    upper bound on H_max. Requires a strictly diagonally dominant positive
    matrix (which forces c_min finite)."""
    if not (analysis.is_positive and analysis.is_sdd) or math.isinf(analysis.c_min):
        raise PreconditionNotMet(
            "surrogates require a strictly diagonally dominant positive matrix"
        )
    n = matrix.n
    c = analysis.c_min
    sigma_star = (c - n / 2.0) / (c + 1.0)
    h_max_star = math.log2(c + 1.0) + (math.log2(n - 1) - c * math.log2(c)) / (c + 1.0)
    return sigma_star, h_max_star


def check_gershgorin_condition(
    matrix: ChannelMatrix, analysis: InverseAnalysis
) -> Condition:
    """The spectral test with sigma*/H*_max substituted, so it needs only
    c_min. Requires sigma* > 0, i.e. c_min > n/2."""
    if not (analysis.is_positive and analysis.is_sdd and analysis.c_min > 1.0):
        return Condition.PRECONDITION_NOT_MET
    sigma_star, h_max_star = spectral_surrogates(matrix, analysis)
    if sigma_star <= 0.0:
        return Condition.PRECONDITION_NOT_MET
    n = matrix.n
    c = analysis.c_min
    v = c / (c - 1.0)
    lhs = (1.0 / v) * math.log2((c - 1.0) / (n - 1) ** 2)
    rhs = n * h_max_star / sigma_star
    return Condition.HOLDS if lhs >= rhs else Condition.FAILS


def capacity_upper_bound(
    matrix: ChannelMatrix, analysis: InverseAnalysis | None = None
) -> BoundReport:
    """Full closed-form report for an invertible positive channel matrix.

    The bound H(q*) + sum_ij p*_i A_ij log2 A_ij is reported even when p* is
    infeasible (it stays a valid upper bound; the flag records feasibility).
    """
    if analysis is None:
        analysis = analyze_inverse(matrix)
    if not analysis.is_positive:
        raise NotPositive("the closed-form bound requires a strictly positive matrix")
    k = inverse_row_entropies(matrix, analysis)
    q_star = optimal_output_distribution(k)
    p_star = analysis.inverse.T @ q_star
    upper = entropy_bits(q_star) - float(p_star @ analysis.row_entropies)
    spectral, v = check_spectral_condition(matrix, analysis)
    if analysis.is_sdd:
        sigma_star, h_max_star = spectral_surrogates(matrix, analysis)
    else:
        sigma_star, h_max_star = math.nan, math.nan
    return BoundReport(
        inverse_entropies=k,
        q_star=q_star,
        p_star=p_star,
        upper_bound=upper,
        p_star_feasible=bool((p_star >= FEASIBILITY_TOL).all()),
        feasibility_condition=check_feasibility_condition(matrix, analysis, k),
        spectral_condition=spectral,
        coarse_condition=check_coarse_condition(matrix, analysis),
        gershgorin_condition=check_gershgorin_condition(matrix, analysis),
        sigma_star=sigma_star,
        h_max_star=h_max_star,
        root_exponent=v,
        analysis=analysis,
    )
