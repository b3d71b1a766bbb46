"""Eventually-periodic digit/probability models.

A model fixes a base ``s`` (the ratio of the geometric series is ``1/s``) and
an infinite sequence of columns. Column ``n`` holds the ``s`` admissible
digits ``d_{0n}, ..., d_{(s-1)n}`` together with their probabilities. The
sequence is stored as a finite prefix followed by a cycle repeated forever,
so all infinite sums and products over columns have closed forms.

Columns are plain tuples of :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence, Tuple

from .exceptions import ModelError

DigitColumn = Tuple[Fraction, ...]
ProbColumn = Tuple[Fraction, ...]


def _as_columns(cols) -> tuple:
    return tuple(tuple(Fraction(v) for v in col) for col in cols)


@dataclass(frozen=True)
class Model:
    s: int
    digit_prefix: tuple
    digit_cycle: tuple
    prob_prefix: tuple
    prob_cycle: tuple

    def __post_init__(self):
        # Coerce nested sequences to tuples of Fractions; validation is left
        # to validate() so malformed models can still be reported on.
        for name in ("digit_prefix", "digit_cycle", "prob_prefix", "prob_cycle"):
            object.__setattr__(self, name, _as_columns(getattr(self, name)))

    @classmethod
    def uniform(cls, s: int, digit_cycle, digit_prefix=()) -> "Model":
        """Model with every probability equal to ``1/s``."""
        u = tuple(Fraction(1, s) for _ in range(s))
        digit_prefix = _as_columns(digit_prefix)
        digit_cycle = _as_columns(digit_cycle)
        return cls(
            s,
            digit_prefix,
            digit_cycle,
            tuple(u for _ in digit_prefix),
            tuple(u for _ in digit_cycle),
        )

    @property
    def prefix_len(self) -> int:
        return len(self.digit_prefix)

    @property
    def cycle_len(self) -> int:
        return len(self.digit_cycle)

    def columns(self):
        """All stored (digit, prob) column pairs, prefix first."""
        return list(zip(self.digit_prefix, self.prob_prefix)) + list(
            zip(self.digit_cycle, self.prob_cycle)
        )

    def with_probs(self, prob_prefix, prob_cycle) -> "Model":
        return replace(self, prob_prefix=prob_prefix, prob_cycle=prob_cycle)

    def uniformized(self) -> "Model":
        """Same digits, uniform probabilities."""
        return Model.uniform(self.s, self.digit_cycle, self.digit_prefix)


@dataclass(frozen=True)
class ValidationReport:
    is_integer: bool
    is_complete_residue: bool
    is_uniform: bool
    L: Fraction
    messages: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no structural violation was found."""
        return not self.messages

    def as_dict(self) -> dict:
        from .rational import format_rational

        return {
            "valid": self.ok,
            "is_integer": self.is_integer,
            "is_complete_residue": self.is_complete_residue,
            "is_uniform": self.is_uniform,
            "L": format_rational(self.L),
            "messages": list(self.messages),
        }


def column_at(model: Model, n: int) -> tuple[DigitColumn, ProbColumn]:
    """Return the digit and probability columns for position ``n >= 1``."""
    if n < 1:
        raise ValueError(f"column index must be >= 1, got {n}")
    p = model.prefix_len
    if n <= p:
        return model.digit_prefix[n - 1], model.prob_prefix[n - 1]
    i = (n - p - 1) % model.cycle_len
    return model.digit_cycle[i], model.prob_cycle[i]


def validate(model: Model) -> ValidationReport:
    """Check structural invariants and compute the hypothesis flags."""
    s = model.s
    messages = []
    if not isinstance(s, int) or isinstance(s, bool) or s < 2:
        messages.append(f"s: must be an integer >= 2, got {s!r}")
        s_ok = False
    else:
        s_ok = True
    if not model.digit_cycle:
        messages.append("digit_cycle: must be nonempty")
    if len(model.prob_prefix) != len(model.digit_prefix):
        messages.append(
            f"prob_prefix: length {len(model.prob_prefix)} does not match "
            f"digit_prefix length {len(model.digit_prefix)}"
        )
    if len(model.prob_cycle) != len(model.digit_cycle):
        messages.append(
            f"prob_cycle: length {len(model.prob_cycle)} does not match "
            f"digit_cycle length {len(model.digit_cycle)}"
        )

    all_digits = []
    groups = (
        ("digit_prefix", model.digit_prefix),
        ("digit_cycle", model.digit_cycle),
    )
    for name, cols in groups:
        for i, col in enumerate(cols):
            if s_ok and len(col) != s:
                messages.append(f"{name}[{i}]: expected {s} digits, got {len(col)}")
            if len(set(col)) != len(col):
                messages.append(f"{name}[{i}]: digits must be pairwise distinct")
            all_digits.extend(col)
    for name, cols in (("prob_prefix", model.prob_prefix), ("prob_cycle", model.prob_cycle)):
        for i, col in enumerate(cols):
            if s_ok and len(col) != s:
                messages.append(f"{name}[{i}]: expected {s} probabilities, got {len(col)}")
            if any(p < 0 for p in col):
                messages.append(f"{name}[{i}]: probabilities must be >= 0")
            total = sum(col, Fraction(0))
            if total != 1:
                messages.append(f"{name}[{i}]: probabilities sum to {total}, not 1")

    is_integer = all(d.denominator == 1 for d in all_digits)
    is_complete_residue = False
    if is_integer and s_ok and all_digits:
        is_complete_residue = all(
            sorted(int(d) % s for d in col) == list(range(s))
            for col in model.digit_prefix + model.digit_cycle
        )
    is_uniform = s_ok and all(
        all(p == Fraction(1, s) for p in col)
        for col in model.prob_prefix + model.prob_cycle
    )
    L = max((abs(d) for d in all_digits), default=Fraction(0))
    return ValidationReport(is_integer, is_complete_residue, is_uniform, L, messages)


def require_valid(model: Model) -> ValidationReport:
    report = validate(model)
    if not report.ok:
        raise ModelError("invalid model: " + "; ".join(report.messages), report.messages)
    return report


def periodic_series(model: Model, n: int, term: Callable[[DigitColumn], Fraction]) -> Fraction:
    """Exact value of ``sum_{k>n} term(column k) / s^k``.

    The prefix contributes a finite sum; the cycle contributes a geometric
    series in ``s^{-cycle_len}``.
    """
    s = model.s
    p, c = model.prefix_len, model.cycle_len
    total = Fraction(0)
    for k in range(n + 1, p + 1):
        total += term(model.digit_prefix[k - 1]) / Fraction(s) ** k
    start = max(n, p)
    # rotate the cycle so that position start+1 comes first
    off = (start - p) % c
    rotated = model.digit_cycle[off:] + model.digit_cycle[:off]
    one_cycle = sum(
        (term(col) / Fraction(s) ** (i + 1) for i, col in enumerate(rotated)),
        Fraction(0),
    )
    cycle_sum = one_cycle / (1 - Fraction(1, s**c))
    return total + cycle_sum / Fraction(s) ** start


def normalize(model: Model) -> tuple[Model, Fraction]:
    """Sort every column ascending and translate its minimum to zero.

    Returns ``(normalized, shift)`` with ``M(model) = M(normalized) + shift``.
    Probabilities travel with their digits.
    """
    require_valid(model)
    shift = periodic_series(model, 0, min)

    def fix(dcols, pcols):
        out_d, out_p = [], []
        for dcol, pcol in zip(dcols, pcols):
            pairs = sorted(zip(dcol, pcol))
            lo = pairs[0][0]
            out_d.append(tuple(d - lo for d, _ in pairs))
            out_p.append(tuple(q for _, q in pairs))
        return tuple(out_d), tuple(out_p)

    dp, pp = fix(model.digit_prefix, model.prob_prefix)
    dc, pc = fix(model.digit_cycle, model.prob_cycle)
    return Model(model.s, dp, dc, pp, pc), shift


def is_normalized(model: Model) -> bool:
    return all(
        col[0] == 0 and all(a < b for a, b in zip(col, col[1:]))
        for col in model.digit_prefix + model.digit_cycle
    )


def tail_sup(model: Model, n: int) -> Fraction:
    """Largest value of the remainder ``sum_{k>n} psi_k / s^k``.

    For a normalized model the remainder ranges over ``[0, tail_sup(n)]``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return periodic_series(model, n, max)


def coarse_tail_bound(model: Model, n: int) -> Fraction:
    """The cruder bound ``L / ((s - 1) s^n)`` dominating :func:`tail_sup`."""
    L = validate(model).L
    return L / ((model.s - 1) * Fraction(model.s) ** n)


def digit_scale(model: Model) -> int:
    """Common denominator of all digits (1 for integer digit models)."""
    from .rational import lcm_of_denominators

    return lcm_of_denominators(d for col in model.digit_prefix + model.digit_cycle for d in col)


def from_columns(s: int, digit_cols: Sequence, prob_cols: Sequence | None = None, prefix_len: int = 0) -> Model:
    """Build a model from flat column lists, the first ``prefix_len`` forming the prefix."""
    digit_cols = list(digit_cols)
    if prob_cols is None:
        prob_cols = [[Fraction(1, s)] * s for _ in digit_cols]
    prob_cols = list(prob_cols)
    return Model(
        s,
        digit_cols[:prefix_len],
        digit_cols[prefix_len:],
        prob_cols[:prefix_len],
        prob_cols[prefix_len:],
    )
