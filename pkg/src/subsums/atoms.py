"""Exact atom masses of the truncated random series.

At level ``n`` the partial sum ``sum_{k<=n} psi_k / s^k`` of a normalized
integer-digit model takes values ``r / s^n`` with ``r`` a nonnegative
integer. :class:`AtomTable` maps each such offset ``r`` to its exact mass
``S(r; n)``; equivalently it holds the coefficients of the generating
polynomial ``h_n(t) = sum_r S(r; n) t^r``.

Going from level ``k`` to ``k + 1`` multiplies ``h_k(t^s)`` by the column
polynomial ``sum_j p_{j,k+1} t^{d_{j,k+1}}``, i.e. every offset ``r`` spawns
offsets ``s*r + d_j``. (Substituting ``t^{s^k}`` instead of ``t^s`` does not
reproduce the definition of ``h_n``; the brute-force enumeration below is
the arbiter and agrees with the ``t^s`` form.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .digit_system import Model, column_at, is_normalized, normalize, require_valid
from .exceptions import ResourceGuardError, UnsupportedOperationError

DEFAULT_MAX_ENTRIES = 10**7


@dataclass(frozen=True)
class AtomTable:
    level: int
    masses: dict  # int offset -> Fraction, ascending by offset
    model: Model  # normalized
    shift: Fraction = Fraction(0)

    def __len__(self):
        return len(self.masses)

    @property
    def total_mass(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))

    def offsets(self) -> list:
        return list(self.masses)

    def point(self, r: int) -> Fraction:
        """Position of offset ``r`` in the original (un-normalized) coordinates."""
        return Fraction(r, self.model.s**self.level) + self.shift


def _prepare(model: Model) -> tuple[Model, Fraction]:
    require_valid(model)
    if is_normalized(model):
        return model, Fraction(0)
    return normalize(model)


def _require_integer(model: Model):
    for col in model.digit_prefix + model.digit_cycle:
        if any(d.denominator != 1 for d in col):
            raise UnsupportedOperationError(
                "atom offsets need integer digits; use the sampler or the "
                "interval cover for rational digit models"
            )


def check_guard(s: int, n: int, max_entries: int = DEFAULT_MAX_ENTRIES):
    projected = s**n
    if projected > max_entries:
        raise ResourceGuardError(projected, max_entries)


def initial_table(model: Model) -> AtomTable:
    norm, shift = _prepare(model)
    _require_integer(norm)
    return AtomTable(0, {0: Fraction(1)}, norm, shift)


def extend(table: AtomTable) -> AtomTable:
    """Advance ``table`` by one level, accumulating colliding offsets."""
    model = table.model
    s = model.s
    digits, probs = column_at(model, table.level + 1)
    active = [(int(d), p) for d, p in zip(digits, probs) if p > 0]
    out: dict = {}
    for r, m in table.masses.items():
        base = s * r
        for d, p in active:
            key = base + d
            out[key] = out.get(key, 0) + m * p
    return AtomTable(table.level + 1, dict(sorted(out.items())), model, table.shift)


def table_at(model: Model, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> AtomTable:
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    check_guard(model.s, n, max_entries)
    table = initial_table(model)
    for _ in range(n):
        table = extend(table)
    return table


def iter_tables(model: Model, n_max: int, max_entries: int = DEFAULT_MAX_ENTRIES):
    """Yield the tables for levels ``0..n_max`` in order."""
    check_guard(model.s, n_max, max_entries)
    table = initial_table(model)
    yield table
    for _ in range(n_max):
        table = extend(table)
        yield table


def max_mass(table: AtomTable) -> Fraction:
    return max(table.masses.values())


def brute_force_table(model: Model, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> AtomTable:
    """Level-``n`` table by direct enumeration of all ``s^n`` digit tuples.

    Independent of :func:`extend`: each tuple's offset is the partial sum
    ``sum_k d_{j_k k} s^{n-k}`` and its mass the product of its probabilities.
    """
    check_guard(model.s, n, max_entries)
    norm, shift = _prepare(model)
    _require_integer(norm)
    s = norm.s
    cols = [column_at(norm, k) for k in range(1, n + 1)]
    out: dict = {}
    for tup in itertools.product(range(s), repeat=n):
        mass = Fraction(1)
        r = 0
        for k, j in enumerate(tup):
            digits, probs = cols[k]
            mass *= probs[j]
            r += int(digits[j]) * s ** (n - 1 - k)
        if mass:
            out[r] = out.get(r, 0) + mass
    return AtomTable(n, dict(sorted(out.items())), norm, shift)


def decomposition(model: Model, k: int, max_entries: int = DEFAULT_MAX_ENTRIES):
    """All ``s^k`` pairs ``(c_j, q_j)`` of partial sums and their probabilities.

    ``c_j = sum_{i<=k} d_{alpha_i i} / s^i`` for a digit tuple ``alpha`` and
    ``q_j = prod_i p_{alpha_i i}``; listed in lexicographic tuple order.
    Works for rational digits as well.
    """
    check_guard(model.s, k, max_entries)
    s = model.s
    cols = [column_at(model, i) for i in range(1, k + 1)]
    out = []
    for tup in itertools.product(range(s), repeat=k):
        c = Fraction(0)
        q = Fraction(1)
        for i, j in enumerate(tup):
            digits, probs = cols[i]
            c += digits[j] / Fraction(s) ** (i + 1)
            q *= probs[j]
        out.append((c, q))
    return out
