"""Reference capacities and the two competing published upper bounds.

The iterative solver is the classic alternating maximization: with
D_i = sum_j A_ij log2(A_ij / q_j) and q = A^T p, update
p_i <- p_i 2^(D_i) / sum_k p_k 2^(D_k). At every step

    sum_i p_i D_i  <=  C  <=  max_i D_i,

so the bracket width is a certified optimality gap; iteration stops once it
drops below the tolerance and the lower end is reported as the capacity.

The grid oracle is an independent brute-force check for tiny alphabets: it
evaluates mutual information on the whole simplex lattice {k/resolution} and
reports the lattice maximum, with the same D-bracket evaluated at the
maximizer as its certified gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, NotConverged, TooLarge
from .matrix import ChannelMatrix, entropy_bits, row_entropies

GRID_MAX_N = 4
DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class CapacityEstimate:
    capacity: float
    optimal_input: np.ndarray
    iterations: int
    gap: float
    method: str  # "blahut-arimoto" or "grid-oracle"


def _divergence_terms(entries: np.ndarray, p: np.ndarray) -> np.ndarray:
    """D_i = sum_j A_ij log2(A_ij/q_j) with q = A^T p; zero entries drop out."""
    q = entries.T @ p
    mask = entries > 0.0
    loga = np.where(mask, np.log2(np.where(mask, entries, 1.0)), 0.0)
    logq = np.where(q > 0.0, np.log2(np.where(q > 0.0, q, 1.0)), 0.0)
    return (np.where(mask, entries * (loga - logq[np.newaxis, :]), 0.0)).sum(axis=1)


def blahut_arimoto(
    matrix: ChannelMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CapacityEstimate:
    """Capacity via alternating maximization from the uniform input pmf.

    Raises NotConverged (carrying the running estimate) if the bracket gap
    stays above ``tol`` after ``max_iter`` updates.
    """
    if tol <= 0.0:
        raise InvalidParameter(f"tolerance must be positive, got {tol!r}")
    entries = matrix.entries
    n = matrix.n
    p = np.full(n, 1.0 / n)
    iterations = 0
    while True:
        d = _divergence_terms(entries, p)
        lower = float(p @ d)
        gap = float(d.max()) - lower
        if gap <= tol:
            return CapacityEstimate(lower, p, iterations, gap, "blahut-arimoto")
        if iterations >= max_iter:
            estimate = CapacityEstimate(lower, p, iterations, gap, "blahut-arimoto")
            raise NotConverged(iterations, gap, estimate)
        w = p * np.exp2(d - d.max())
        p = w / w.sum()
        iterations += 1


def _simplex_lattice(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = []
    for first in range(total + 1):
        rest = _simplex_lattice(total - first, parts - 1)
        head = np.full((rest.shape[0], 1), first, dtype=np.int64)
        blocks.append(np.hstack([head, rest]))
    return np.vstack(blocks)


def grid_oracle(matrix: ChannelMatrix, resolution: int) -> CapacityEstimate:
    """Exhaustive lattice search over input pmfs p = k/resolution, n <= 4.

    ``iterations`` reports the number of lattice points evaluated; ``gap`` is
    the certified bracket max_i D_i - I at the lattice maximizer, so the true
    capacity lies within [capacity, capacity + gap].
    """
    n = matrix.n
    if n > GRID_MAX_N:
        raise TooLarge(n, GRID_MAX_N)
    if resolution < 10:
        raise InvalidParameter(f"resolution must be at least 10, got {resolution}")
    pmfs = _simplex_lattice(resolution, n).astype(float) / resolution
    q = pmfs @ matrix.entries
    with np.errstate(divide="ignore", invalid="ignore"):
        h_out = -np.where(q > 0.0, q * np.log2(np.where(q > 0.0, q, 1.0)), 0.0).sum(axis=1)
    ent, _ = row_entropies(matrix)
    mi = h_out - pmfs @ ent
    best = int(np.argmax(mi))
    p_best = pmfs[best]
    d = _divergence_terms(matrix.entries, p_best)
    gap = float(d.max()) - float(mi[best])
    return CapacityEstimate(float(mi[best]), p_best, len(pmfs), gap, "grid-oracle")


def arimoto_upper_bound(matrix: ChannelMatrix) -> float:
    """log2(n) + max over rows of sum_j A_ij log2(A_ij / column_sum_j).

    The max term is nonpositive (it is -log2(n) plus a divergence from the
    uniform-input output distribution).
    """
    entries = matrix.entries
    n = matrix.n
    col = entries.sum(axis=0)
    mask = entries > 0.0
    ratio = np.where(mask, entries / np.where(mask, col[np.newaxis, :], 1.0), 1.0)
    terms = (np.where(mask, entries * np.log2(ratio), 0.0)).sum(axis=1)
    return float(np.log2(n) + terms.max())


def boyd_chiang_upper_bound(matrix: ChannelMatrix, orientation: str = "column-max") -> float:
    """log2 of the sum of columnwise (default) or rowwise maxima.

    Both orientations are exposed because published uses disagree on which
    axis the maximum runs over; neither is declared canonical here.
    """
    if orientation == "column-max":
        return float(np.log2(matrix.entries.max(axis=0).sum()))
    if orientation == "row-max":
        return float(np.log2(matrix.entries.max(axis=1).sum()))
    raise InvalidParameter(f"unknown orientation {orientation!r}")
