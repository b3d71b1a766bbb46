"""Seeded Monte Carlo draws of the truncated series and a DKW band test.

Each draw picks digit ``j`` of column ``k`` by inverse CDF on an exact
integer uniform: with ``D`` the common denominator of the column's
probabilities, ``u`` is uniform on ``{0, ..., D-1}`` and ``j`` is the first
index whose cumulative numerator exceeds ``u``.

Draws are made on the normalized model and accumulated as exact integers
over ``scale * s^depth``; the value reported is that partial sum plus the
normalization shift. It is the point of the subsum set whose digits after
``depth`` are all column minima, so the full series exceeds it by at most
``bias``.

The generator is numpy's PCG64 seeded from ``seed``; columns are drawn in
order ``k = 1..depth``, each as one vector over all samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cdf import curve_from_table, support_grid
from .atoms import DEFAULT_MAX_ENTRIES, table_at
from .digit_system import Model, column_at, digit_scale, normalize, tail_sup
from .rational import lcm_of_denominators

DEFAULT_DEPTH = 64
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class SampleBatch:
    seed: int
    depth: int
    numerators: tuple  # Python ints
    denominator: int
    bias: Fraction  # psi - value lies in [0, bias]
    shift: Fraction = Fraction(0)

    def __len__(self):
        return len(self.numerators)

    @property
    def values(self) -> list:
        return [Fraction(v, self.denominator) + self.shift for v in self.numerators]

    def as_float(self) -> np.ndarray:
        return np.array(
            [v / self.denominator for v in self.numerators], dtype=float
        ) + float(self.shift)


def _draw_indices(rng: np.random.Generator, probs, count: int) -> np.ndarray:
    D = lcm_of_denominators(probs)
    cum = np.cumsum([int(p * D) for p in probs])
    if D <= _INT64_MAX:
        u = rng.integers(0, D, size=count)
    else:
        # exact for at most 53 bits of u; only reached with huge denominators
        u = np.floor(rng.random(count) * float(D))
    return np.searchsorted(cum, u, side="right")


def sample(model: Model, count: int, seed: int, depth: int = DEFAULT_DEPTH) -> SampleBatch:
    """Draw ``count`` realizations of psi truncated after ``depth`` digits."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    norm, shift = normalize(model)
    s = norm.s
    scale = digit_scale(norm)
    rng = np.random.Generator(np.random.PCG64(seed))
    acc = np.zeros(count, dtype=object)
    acc[:] = 0
    for k in range(1, depth + 1):
        digits, probs = column_at(norm, k)
        idx = _draw_indices(rng, probs, count)
        table = np.array([int(d * scale) for d in digits], dtype=object)
        acc = acc * s + table[idx]
    return SampleBatch(
        seed,
        depth,
        tuple(int(v) for v in acc),
        scale * s**depth,
        tail_sup(norm, depth),
        shift,
    )


def dkw_epsilon(count: int, alpha: float) -> float:
    """Half-width of the DKW confidence band for ``count`` samples."""
    return math.sqrt(math.log(2 / alpha) / (2 * count))


@dataclass(frozen=True)
class BandReport:
    max_violation: float
    epsilon: float
    passed: bool
    low_power: bool
    grid_size: int
    level: int
    count: int

    def as_dict(self) -> dict:
        return {
            "max_violation": self.max_violation,
            "epsilon": self.epsilon,
            "pass": self.passed,
            "low_power": self.low_power,
            "grid_size": self.grid_size,
            "level": self.level,
            "count": self.count,
        }


LOW_POWER_EPSILON = 0.1


def band_check(batch: SampleBatch, model: Model, n_level: int, grid_size: int = 101,
               alpha: float = 0.01, max_entries: int = DEFAULT_MAX_ENTRIES) -> BandReport:
    """Compare the empirical CDF of ``batch`` against the exact level bounds of ``model``.

    A truncated sample ``v`` underestimates its full value by at most
    ``batch.bias``, so ``P(v < x)`` lies in ``[lo(x), hi(x + bias)]``. The
    test passes when the empirical CDF is within ``epsilon`` of that range at
    every grid point.
    """
    table = table_at(model, n_level, max_entries)
    grid = support_grid(model, grid_size)
    lows = curve_from_table(table, grid)
    highs = curve_from_table(table, [x + batch.bias for x in grid])
    nums = np.sort(np.array(batch.numerators, dtype=object))
    N = len(nums)
    den = batch.denominator
    worst = 0.0
    for x, lo_b, hi_b in zip(grid, lows, highs):
        # count samples v < x, i.e. numerator < (x - shift) * den
        thr = (Fraction(x) - batch.shift) * den
        k = int(np.searchsorted(nums, math.ceil(thr), side="left"))
        emp = Fraction(k, N)
        excess = max(lo_b.lo - emp, emp - hi_b.hi, Fraction(0))
        worst = max(worst, float(excess))
    eps = dkw_epsilon(N, alpha)
    return BandReport(worst, eps, worst <= eps, eps >= LOW_POWER_EPSILON, grid_size, n_level, N)
