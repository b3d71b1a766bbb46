"""Interval covers of the subsum set and upper bounds on its measure.

Fixing the first ``n`` digits pins the partial sum to ``r / s^n`` and leaves
the remainder in ``[0, tail_sup(n)]`` (normalized model). The union of the
intervals ``[r / s^n, r / s^n + tail_sup(n)]`` over all level-``n`` offsets
therefore covers ``M``; each level-``n+1`` interval sits inside its parent, so
the total length is nonincreasing in ``n``.

Only the digits matter here, never the probabilities. Rational digits are
handled by scaling with their common denominator.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

import numpy as np

from .atoms import DEFAULT_MAX_ENTRIES, check_guard
from .digit_system import Model, column_at, digit_scale, is_normalized, normalize, require_valid, tail_sup
from .exceptions import InvariantViolation

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class IntervalCover:
    level: int
    intervals: list  # [(lo, hi)] Fractions, normalized coordinates
    total_length: Fraction
    shift: Fraction = Fraction(0)

    def shifted_intervals(self) -> list:
        return [(lo + self.shift, hi + self.shift) for lo, hi in self.intervals]

    @cached_property
    def _los(self) -> list:
        return [lo for lo, _ in self.intervals]

    def contains(self, x, slack=Fraction(0)) -> bool:
        """Whether ``x`` (original coordinates) lies in the cover widened by ``slack``."""
        y = Fraction(x) - self.shift
        i = bisect.bisect_right(self._los, y + slack) - 1
        if i < 0:
            return False
        return y - slack <= self.intervals[i][1]


def merge_intervals(intervals) -> list:
    """Union of closed intervals as sorted, maximal, disjoint pieces.

    >>> merge_intervals([(0, 2), (1, 3)])
    [(0, 3)]
    >>> merge_intervals([(0, 1), (1, 2)])
    [(0, 2)]
    >>> merge_intervals([(2, 3), (0, 1)])
    [(0, 1), (2, 3)]
    """
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


class _Support:
    """Level-by-level set of integer offsets of a normalized model.

    Offsets are in units of ``1 / (scale * s^n)``.
    """

    def __init__(self, model: Model):
        self.model = model
        self.scale = digit_scale(model)
        self.level = 0
        self.offsets = np.zeros(1, dtype=np.int64)
        # an upper bound on every offset at level n is tail_sup(0) * scale * s^n
        self._top = tail_sup(model, 0) * self.scale

    def advance(self):
        s = self.model.s
        digits, _ = column_at(self.model, self.level + 1)
        ints = [int(d * self.scale) for d in digits]
        if self.offsets.dtype != object and self._top * s ** (self.level + 1) >= _INT64_SAFE:
            self.offsets = self.offsets.astype(object)
        dig = np.array(ints, dtype=self.offsets.dtype)
        new = (self.offsets[:, None] * s + dig[None, :]).ravel()
        self.offsets = np.unique(new)
        self.level += 1

    def components(self):
        """Merged components as (start, end) offset index arrays plus the width."""
        n = self.level
        width = tail_sup(self.model, n) * self.scale * self.model.s**n
        a = self.offsets
        # gaps are integers: gap > width iff gap > floor(width)
        breaks = np.nonzero(np.diff(a) > (width.numerator // width.denominator))[0]
        starts = np.concatenate(([0], breaks + 1))
        ends = np.concatenate((breaks, [len(a) - 1]))
        return a, starts, ends, width

    def length(self) -> tuple[int, Fraction]:
        a, starts, ends, width = self.components()
        spans = int(sum(int(v) for v in (a[ends] - a[starts]))) if a.dtype == object else int((a[ends] - a[starts]).sum())
        unit = self.scale * self.model.s**self.level
        return len(starts), (spans + len(starts) * width) / unit


def _prepare(model: Model) -> tuple[Model, Fraction]:
    require_valid(model)
    if is_normalized(model):
        return model, Fraction(0)
    return normalize(model)


def cover(model: Model, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> IntervalCover:
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    check_guard(model.s, n, max_entries)
    norm, shift = _prepare(model)
    sup = _Support(norm)
    for _ in range(n):
        sup.advance()
    a, starts, ends, width = sup.components()
    unit = sup.scale * norm.s**n
    intervals = [
        (Fraction(int(a[i]), unit), Fraction(int(a[j]), unit) + width / unit)
        for i, j in zip(starts, ends)
    ]
    total = sum((hi - lo for lo, hi in intervals), Fraction(0))
    return IntervalCover(n, intervals, total, shift)


def cover_sequence(model: Model, n_max: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> list:
    """``[(n, interval_count, total_length)]`` for ``n = 0..n_max``.

    Raises :class:`InvariantViolation` if the lengths ever increase.
    """
    check_guard(model.s, n_max, max_entries)
    norm, _ = _prepare(model)
    sup = _Support(norm)
    out = []
    prev = None
    for n in range(n_max + 1):
        if n:
            sup.advance()
        count, length = sup.length()
        if prev is not None and length > prev:
            raise InvariantViolation(f"cover length increased at level {n}: {prev} -> {length}")
        prev = length
        out.append((n, count, length))
    return out
