"""Two-sided exact bounds on the distribution function ``F(x) = P(psi < x)``.

At level ``n`` the atom at offset ``r`` carries mass ``S(r; n)`` and the
remaining digits spread it over ``[r / s^n, r / s^n + tail_sup(n)]``. Atoms
whose whole interval lies left of ``x`` are certainly counted in ``F(x)``;
atoms starting at or right of ``x`` certainly are not. The straddling atoms
make up the gap between the bounds.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .atoms import DEFAULT_MAX_ENTRIES, AtomTable, max_mass, table_at
from .digit_system import Model, validate
from .exceptions import InapplicableError


@dataclass(frozen=True)
class CdfBounds:
    x: Fraction
    level: int
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


class _Evaluator:
    def __init__(self, table: AtomTable):
        from .digit_system import tail_sup

        model = table.model
        self.table = table
        self.scale = Fraction(model.s) ** table.level
        self.width = tail_sup(model, table.level) * self.scale
        self.offsets = list(table.masses)
        self.cum = [Fraction(0)] + list(itertools.accumulate(table.masses.values()))

    def __call__(self, x) -> CdfBounds:
        x = Fraction(x)
        X = (x - self.table.shift) * self.scale
        # number of offsets r with r < X, and with r + width < X
        n_hi = bisect.bisect_left(self.offsets, X)
        n_lo = bisect.bisect_left(self.offsets, X - self.width)
        return CdfBounds(x, self.table.level, self.cum[n_lo], self.cum[n_hi])


def cdf_bounds(model: Model, x, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> CdfBounds:
    """Bounds ``lo <= P(psi < x) <= hi`` from the level-``n`` atoms.

    ``x`` is in the model's own (un-normalized) coordinates.
    """
    return _Evaluator(table_at(model, n, max_entries))(x)


def cdf_curve(model: Model, grid, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> list:
    ev = _Evaluator(table_at(model, n, max_entries))
    return [ev(x) for x in grid]


def curve_from_table(table: AtomTable, grid) -> list:
    ev = _Evaluator(table)
    return [ev(x) for x in grid]


def support_grid(model: Model, size: int) -> list:
    """``size`` equispaced rationals from the minimum to the maximum of the support."""
    from .digit_system import normalize, tail_sup

    norm, shift = normalize(model)
    top = tail_sup(norm, 0)
    if size == 1:
        return [shift]
    return [shift + top * Fraction(i, size - 1) for i in range(size)]


@dataclass(frozen=True)
class LipschitzReport:
    level: int
    max_mass: Fraction
    ratio: Fraction  # max_mass * s^n

    @property
    def holds(self) -> bool:
        return self.ratio <= 1


def lipschitz_check(model: Model, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> LipschitzReport:
    """Discrete Lipschitz bound: every level-``n`` atom has mass at most ``s^-n``.

    Only a theorem for uniform probabilities on complete residue columns, so
    other models are refused.
    """
    report = validate(model)
    if not (report.ok and report.is_uniform and report.is_complete_residue):
        raise InapplicableError(
            "Lipschitz bound requires uniform probabilities and complete residue columns"
        )
    m = max_mass(table_at(model, n, max_entries))
    return LipschitzReport(n, m, m * model.s**n)
