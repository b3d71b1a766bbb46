"""Lebesgue type of the distribution of the random series.

Two infinite products over the columns decide the type:

* ``W = prod_n max_j p_jn``; ``W > 0`` iff the distribution is discrete.
* ``Q = prod_n sum_j sqrt(p_jn / s)``; ``Q > 0`` gives absolute continuity
  when every column is an integer complete residue system mod ``s``, and
  ``W = 0 = Q`` gives singularity.

For eventually-periodic models both products are decided exactly: the
prefix contributes a finite nonzero factor, and the cycle product is either
identically 1 or strictly below 1 and therefore drives the product to 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .digit_system import Model, ValidationReport, require_valid
from .rational import format_rational

DIAGNOSTIC_DIGITS = 30


class Verdict(str, enum.Enum):
    DISCRETE = "Discrete"
    SINGULAR = "Singular"
    ABSOLUTELY_CONTINUOUS = "AbsolutelyContinuous"
    CONTINUOUS_UNCLASSIFIED = "ContinuousUnclassified"


@dataclass(frozen=True)
class ProductStatus:
    positive: bool
    prefix_factor: object  # Fraction for W, Decimal for Q
    cycle_factor_is_one: bool
    cycle_factor_decimal: Decimal

    @property
    def cycle_factor_description(self) -> str:
        if self.cycle_factor_is_one:
            return "cycle factor equals 1 exactly"
        return "cycle factor is strictly less than 1; infinite product is 0"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    w_status: ProductStatus
    q_status: ProductStatus
    preconditions: ValidationReport

    def as_dict(self) -> dict:
        w, q = self.w_status, self.q_status
        pre = self.preconditions
        return {
            "verdict": self.verdict.value,
            "w_positive": w.positive,
            "q_positive": q.positive,
            "w_prefix_factor": format_rational(w.prefix_factor),
            "w_cycle_factor_decimal": str(w.cycle_factor_decimal),
            "q_prefix_factor_decimal": str(q.prefix_factor),
            "cycle_factor_decimal": str(q.cycle_factor_decimal),
            "is_integer": pre.is_integer,
            "is_complete_residue": pre.is_complete_residue,
            "is_uniform": pre.is_uniform,
            "L": format_rational(pre.L),
        }


def _dec(q: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = DIAGNOSTIC_DIGITS
        return Decimal(q.numerator) / Decimal(q.denominator)


def compute_W(model: Model) -> ProductStatus:
    require_valid(model)
    prefix = Fraction(1)
    for col in model.prob_prefix:
        prefix *= max(col)
    cycle = Fraction(1)
    for col in model.prob_cycle:
        cycle *= max(col)
    is_one = cycle == 1
    return ProductStatus(is_one and prefix != 0, prefix, is_one, _dec(cycle))


def hellinger_factor(col, s: int, digits: int = DIAGNOSTIC_DIGITS) -> Decimal:
    """Decimal value of ``sum_j sqrt(p_j / s)``; diagnostic only."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        total = sum(
            ((Decimal(p.numerator) / Decimal(p.denominator * s)).sqrt() for p in col),
            Decimal(0),
        )
    with localcontext() as ctx:
        ctx.prec = digits
        return +total


def is_uniform_column(col, s: int) -> bool:
    # Cauchy-Schwarz: sum_j sqrt(p_j/s) <= 1 with equality iff p_j = 1/s for all j.
    return all(p == Fraction(1, s) for p in col)


def compute_Q(model: Model) -> ProductStatus:
    require_valid(model)
    s = model.s

    def product(cols) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = DIAGNOSTIC_DIGITS + 10
            out = Decimal(1)
            for col in cols:
                out *= hellinger_factor(col, s, DIAGNOSTIC_DIGITS + 10)
        with localcontext() as ctx:
            ctx.prec = DIAGNOSTIC_DIGITS
            return +out

    is_one = all(is_uniform_column(col, s) for col in model.prob_cycle)
    # prefix factors are > 0 always: some p_j >= 1/s in each column
    return ProductStatus(is_one, product(model.prob_prefix), is_one, product(model.prob_cycle))


def classify(model: Model) -> Classification:
    report = require_valid(model)
    w = compute_W(model)
    q = compute_Q(model)
    if w.positive:
        verdict = Verdict.DISCRETE
    elif q.positive and report.is_complete_residue:
        verdict = Verdict.ABSOLUTELY_CONTINUOUS
    elif not q.positive:
        verdict = Verdict.SINGULAR
    else:
        verdict = Verdict.CONTINUOUS_UNCLASSIFIED
    return Classification(verdict, w, q, report)
