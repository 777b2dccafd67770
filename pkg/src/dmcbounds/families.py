"""Deterministic channel-matrix generators.

Fixed 3x3 study matrices, three parametric 4x4/(n+1)-ary families (relay
summation channel, permutation-row family, reliability family), the binary
symmetric channel, and a seeded generator of strictly diagonally dominant
positive matrices for property testing.

The random generator uses splitmix64 so fixtures are reproducible bit-for-bit
from the seed alone, in any language with 64-bit integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InvalidParameter
from .matrix import ChannelMatrix, validate_channel

RELAY_MAX_N = 60

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: 64-bit state, golden-gamma increment, two xor-shift mixes."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * 2.0**-53


def fixed_example(which: str) -> ChannelMatrix:
    """The three fixed 3x3 study matrices: a reliable channel, a
    permutation-row channel with unequal column sums, and an unreliable one."""
    matrices = {
        "example-1": [
            [0.95, 0.01, 0.04],
            [0.03, 0.95, 0.02],
            [0.02, 0.02, 0.96],
        ],
        "example-3": [
            [0.93, 0.04, 0.03],
            [0.04, 0.93, 0.03],
            [0.04, 0.03, 0.93],
        ],
        "example-4": [
            [0.6, 0.3, 0.1],
            [0.7, 0.1, 0.2],
            [0.5, 0.05, 0.45],
        ],
    }
    if which not in matrices:
        raise InvalidParameter(f"unknown fixed example {which!r}")
    return validate_channel(matrices[which])


def bsc(crossover: float) -> ChannelMatrix:
    """Binary symmetric channel with the given crossover probability."""
    if not 0.0 <= crossover <= 1.0:
        raise InvalidParameter(f"crossover must be in [0, 1], got {crossover!r}")
    p = crossover
    return validate_channel([[1.0 - p, p], [p, 1.0 - p]])


def relay_miso_explicit3(alpha: float) -> np.ndarray:
    """The 4x4 relay summation matrix for three uplinks, written out term by
    term. Ground truth for the general generator's index convention."""
    a = alpha
    b = 1.0 - alpha
    return np.array(
        [
            [b**3, 3 * b * b * a, 3 * b * a * a, a**3],
            [a * b * b, 2 * a * a * b + b**3, 2 * b * b * a + a**3, b * a * a],
            [b * a * a, 2 * b * b * a + a**3, 2 * a * a * b + b**3, a * b * b],
            [a**3, 3 * b * a * a, 3 * b * b * a, b**3],
        ]
    )


def _relay_entries(n: int, alpha: float) -> np.ndarray:
    # Input i means i-1 of the n binary uplinks carry a one; each uplink flips
    # independently with probability alpha; the receiver outputs the count.
    # Entry (i, j), 1-indexed: sum over s = one->zero flips.
    m = n + 1
    a = np.zeros((m, m))
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            lo = max(i - j, 0)
            hi = min(n + 1 - j, i - 1)
            total = 0.0
            for s in range(lo, hi + 1):
                flips = j - i + 2 * s
                total += (
                    comb(n + 1 - i, j - i + s)
                    * comb(i - 1, s)
                    * alpha**flips
                    * (1.0 - alpha) ** (n - flips)
                )
            a[i - 1, j - 1] = total
    return a


@lru_cache(maxsize=1)
def _relay_convention_check() -> bool:
    # The binomial indexing admits several readings; only the one matching the
    # explicit 4x4 matrix is acceptable. Checked once per process.
    for alpha in (0.0, 0.17, 0.5, 0.83, 1.0):
        diff = np.abs(_relay_entries(3, alpha) - relay_miso_explicit3(alpha)).max()
        if diff > 1e-12:
            raise AssertionError(
                f"relay generator convention mismatch at alpha={alpha}: {diff:.3e}"
            )
    return True


def relay_miso(n: int, alpha: float) -> ChannelMatrix:
    """(n+1)-ary channel of n binary uplinks with flip probability alpha,
    summed at the receiver."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")
    if n > RELAY_MAX_N:
        raise InvalidParameter(f"n must be at most {RELAY_MAX_N}, got {n}")
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameter(f"alpha must be in [0, 1], got {alpha!r}")
    _relay_convention_check()
    return validate_channel(_relay_entries(int(n), float(alpha)))


def gamma_family(gamma: float) -> ChannelMatrix:
    """4x4 family whose rows are permutations of the binomial weights
    ((1-g)^3, 3(1-g)^2 g, 3(1-g)g^2, g^3) but whose column sums differ."""
    if not 0.0 < gamma < 1.0:
        raise InvalidParameter(f"gamma must be in (0, 1), got {gamma!r}")
    g = gamma
    w3 = (1.0 - g) ** 3
    w2 = 3.0 * (1.0 - g) ** 2 * g
    w1 = 3.0 * (1.0 - g) * g * g
    w0 = g**3
    return validate_channel(
        [
            [w3, w2, w1, w0],
            [w2, w3, w0, w1],
            [w0, w1, w3, w2],
            [w0, w1, w2, w3],
        ]
    )


def beta_family(beta: float) -> ChannelMatrix:
    """4x4 reliability family: diagonal 1-b, fixed off-diagonal weights
    scaled by b. Strictly diagonally dominant exactly for b < 0.5."""
    if not 0.0 <= beta <= 1.0:
        raise InvalidParameter(f"beta must be in [0, 1], got {beta!r}")
    b = beta
    return validate_channel(
        [
            [1.0 - b, 0.3 * b, 0.4 * b, 0.3 * b],
            [0.4 * b, 1.0 - b, 0.3 * b, 0.3 * b],
            [0.5 * b, 0.4 * b, 1.0 - b, 0.1 * b],
            [0.1 * b, 0.2 * b, 0.7 * b, 1.0 - b],
        ]
    )


def random_sdd_positive(n: int, min_ratio: float, seed: int) -> ChannelMatrix:
    """Seeded strictly diagonally dominant positive matrix with every row's
    diagonal-to-radius ratio at least ``min_ratio``.

    Draw order per row i (splitmix64 stream): one uniform u giving the row
    ratio r_i = min_ratio*(1+u), then n-1 uniforms giving off-diagonal
    weights 0.1+u in column order. Off-diagonal mass is normalized to
    1/(1+r_i) and the diagonal takes the remainder, so the realized ratio is
    exactly r_i and c_min >= min_ratio by construction.
    """
    if n < 2:
        raise InvalidParameter(f"n must be at least 2, got {n!r}")
    if not min_ratio > 1.0:
        raise InvalidParameter(f"min_ratio must exceed 1, got {min_ratio!r}")
    rng = SplitMix64(seed)
    a = np.zeros((n, n))
    for i in range(n):
        ratio = min_ratio * (1.0 + rng.next_float())
        off_mass = 1.0 / (1.0 + ratio)
        weights = np.array([0.1 + rng.next_float() for _ in range(n - 1)])
        weights *= off_mass / weights.sum()
        k = 0
        for j in range(n):
            if j == i:
                a[i, j] = 1.0 - off_mass
            else:
                a[i, j] = weights[k]
                k += 1
    return validate_channel(a)


@dataclass(frozen=True)
class FamilySpec:
    """Parameter bundle naming one generated matrix."""

    family: str
    n: int | None = None
    parameter: float | None = None
    seed: int | None = None


_ALIASES = {
    "gamma-semi-weakly-symmetric": "gamma",
    "beta-reliability": "beta",
    "example-3-fixed": "example-3",
}

FAMILY_NAMES = (
    "relay-miso",
    "gamma",
    "beta",
    "example-1",
    "example-3",
    "example-4",
    "bsc",
    "random-sdd",
)


def canonical_family(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in FAMILY_NAMES:
        raise InvalidParameter(f"unknown family {name!r}")
    return name


def parameter_domain(family: str) -> tuple[float, float, bool]:
    """(lo, hi, endpoints_included) of the family's parameter."""
    family = canonical_family(family)
    if family == "gamma":
        return 0.0, 1.0, False
    if family in ("relay-miso", "beta", "bsc"):
        return 0.0, 1.0, True
    if family == "random-sdd":
        return 1.0, float("inf"), False
    raise InvalidParameter(f"family {family!r} takes no parameter")


def build_family(spec: FamilySpec) -> ChannelMatrix:
    """Dispatch a FamilySpec to its generator, checking required fields."""
    family = canonical_family(spec.family)
    if family in ("example-1", "example-3", "example-4"):
        return fixed_example(family)

    if spec.parameter is None:
        raise InvalidParameter(f"family {family!r} requires a parameter")
    if family == "bsc":
        return bsc(spec.parameter)
    if family == "gamma":
        return gamma_family(spec.parameter)
    if family == "beta":
        return beta_family(spec.parameter)
    if family == "relay-miso":
        if spec.n is None:
            raise InvalidParameter("relay-miso requires n")
        return relay_miso(spec.n, spec.parameter)
    if family == "random-sdd":
        if spec.n is None:
            raise InvalidParameter("random-sdd requires n")
        return random_sdd_positive(spec.n, spec.parameter, spec.seed or 0)
    raise InvalidParameter(f"unknown family {family!r}")
