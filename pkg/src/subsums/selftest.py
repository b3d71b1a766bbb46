"""Built-in consistency checks over the shipped example models."""

from __future__ import annotations

from fractions import Fraction

from .atoms import brute_force_table, iter_tables, max_mass
from .cdf import lipschitz_check
from .classifier import Verdict, classify
from .cover_measure import cover_sequence
from .digit_system import validate
from .exceptions import InvariantViolation
from .modelio import EXAMPLE_MODELS, example_model

EXPECTED_VERDICTS = {
    "binary_uniform": Verdict.ABSOLUTELY_CONTINUOUS,
    "ternary_015_uniform": Verdict.ABSOLUTELY_CONTINUOUS,
    "ternary_015_singular": Verdict.SINGULAR,
    "ternary_013_uniform": Verdict.CONTINUOUS_UNCLASSIFIED,
    "binary_discrete": Verdict.DISCRETE,
}


def _checks(name, model, oracle_level, cover_level):
    yield "verdict", classify(model).verdict == EXPECTED_VERDICTS[name]
    report = validate(model)
    tables = list(iter_tables(model, oracle_level))
    yield "mass", all(t.total_mass == 1 for t in tables)
    yield "oracle", all(t.masses == brute_force_table(model, t.level).masses for t in tables)
    if report.is_uniform and report.is_complete_residue:
        s = model.s
        yield "atom-count", all(len(t) == s**t.level for t in tables)
        yield "max-mass", all(max_mass(t) == Fraction(1, s**t.level) for t in tables)
        yield "lipschitz", lipschitz_check(model, oracle_level).ratio == 1
    seq = cover_sequence(model, cover_level)
    yield "cover-monotone", all(a[2] >= b[2] for a, b in zip(seq, seq[1:]))
    if report.is_uniform and report.is_complete_residue:
        yield "cover-lower", all(length >= 1 for _, _, length in seq)


def run_selftest(oracle_level: int = 5, cover_level: int = 8, out=print) -> bool:
    """Run every check, printing one line each. Raises on the first failure batch."""
    failures = []
    for name in EXAMPLE_MODELS:
        model = example_model(name)
        for check, ok in _checks(name, model, oracle_level, cover_level):
            out(f"{'PASS' if ok else 'FAIL'} {name} {check}")
            if not ok:
                failures.append(f"{name}:{check}")
    if failures:
        raise InvariantViolation("selftest failures: " + ", ".join(failures))
    return True
