import random
from fractions import Fraction

import pytest

from subsums import Model

ACCEPTANCE_LINES = []


def random_probs(rng: random.Random, s: int):
    while True:
        w = [rng.choice([0, 1, 1, 2, 3, 5, 7]) for _ in range(s)]
        if sum(w):
            break
    total = sum(w)
    return tuple(Fraction(x, total) for x in w)


def random_digits(rng: random.Random, s: int):
    return tuple(Fraction(d) for d in rng.sample(range(-9, 10), s))


def random_model(rng: random.Random, s: int | None = None) -> Model:
    """Random valid integer-digit model with a short prefix and cycle."""
    s = s or rng.choice([2, 3, 5])
    p = rng.randint(0, 2)
    c = rng.randint(1, 3)
    return Model(
        s,
        [random_digits(rng, s) for _ in range(p)],
        [random_digits(rng, s) for _ in range(c)],
        [random_probs(rng, s) for _ in range(p)],
        [random_probs(rng, s) for _ in range(c)],
    )


@pytest.fixture
def ternary015():
    return Model.uniform(3, [(0, 1, 5)])


@pytest.fixture
def binary():
    return Model.uniform(2, [(0, 1)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record a pass/fail line for the acceptance summary, then assert."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record
