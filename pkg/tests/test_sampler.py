from fractions import Fraction as F

import numpy as np
import pytest

from subsums import Model, band_check, sample, tail_sup
from subsums.digit_system import from_columns
from subsums.sampler import dkw_epsilon


def test_degenerate_model_is_deterministic():
    m = Model(3, [], [(0, 1, 2), (2, 0, 1)], [], [(F(0), F(1), F(0)), (F(1), F(0), F(0))])
    batch = sample(m, 20, seed=3, depth=10)
    # digits 1, 2, 1, 2, ... truncated at 10 terms
    expected = sum(F(1 if k % 2 else 2, 3**k) for k in range(1, 11))
    assert set(batch.values) == {expected}


def test_binary_mean(binary):
    batch = sample(binary, 10**5, seed=12345, depth=40)
    assert abs(batch.as_float().mean() - 0.5) < 0.005


def test_reproducible(ternary015):
    a = sample(ternary015, 500, seed=99, depth=20)
    b = sample(ternary015, 500, seed=99, depth=20)
    c = sample(ternary015, 500, seed=100, depth=20)
    assert a == b
    assert a.numerators != c.numerators


def test_support_and_bias(ternary015):
    batch = sample(ternary015, 2000, seed=1, depth=12)
    top = tail_sup(ternary015, 0)
    assert all(0 <= v <= top for v in batch.values)
    assert batch.bias == tail_sup(ternary015, 12)


def test_rational_digits_exact():
    m = Model.uniform(2, [(0, F(1, 3))])
    batch = sample(m, 100, seed=5, depth=8)
    assert batch.denominator == 3 * 2**8
    assert all(0 <= v <= F(1, 3) for v in batch.values)


def test_zero_probability_digit_never_drawn():
    m = Model(3, [], [(0, 1, 5)], [], [(F(1, 2), F(1, 2), F(0))])
    batch = sample(m, 3000, seed=2, depth=15)
    assert max(batch.values) <= F(1, 2)


def test_column_frequencies():
    m = Model(3, [], [(0, 1, 2)], [], [(F(1, 6), F(1, 3), F(1, 2))])
    batch = sample(m, 60000, seed=11, depth=1)
    counts = np.bincount([int(v * 3) for v in batch.values], minlength=3) / 60000
    assert np.allclose(counts, [1 / 6, 1 / 3, 1 / 2], atol=0.01)


def test_band_passes_for_matching_model(binary):
    batch = sample(binary, 20000, seed=4, depth=30)
    rep = band_check(batch, binary, 8, grid_size=65, alpha=0.01)
    assert rep.passed and rep.max_violation <= rep.epsilon


def test_band_fails_for_mismatched_model(binary):
    skewed = Model(2, [], [(0, 1)], [], [(F(3, 4), F(1, 4))])
    batch = sample(skewed, 20000, seed=4, depth=30)
    rep = band_check(batch, binary, 8, grid_size=65, alpha=0.01)
    assert not rep.passed and rep.max_violation > 0.1


def test_band_single_sample_low_power(binary):
    batch = sample(binary, 1, seed=0, depth=10)
    rep = band_check(batch, binary, 4, grid_size=11, alpha=0.5)
    assert rep.low_power
    assert rep.epsilon == pytest.approx(dkw_epsilon(1, 0.5))
    assert rep.epsilon > 0.59


def test_dkw_epsilon_value():
    assert dkw_epsilon(10**5, 0.01) == pytest.approx(0.005147, abs=1e-6)


def test_argument_checks(binary):
    with pytest.raises(ValueError):
        sample(binary, 0, seed=1)
    with pytest.raises(ValueError):
        sample(binary, 5, seed=1, depth=0)


def test_prefix_model_samples_in_support():
    m = from_columns(2, [(-3, 1), (0, 2)], [(F(1, 2), F(1, 2)), (F(1, 5), F(4, 5))], prefix_len=1)
    batch = sample(m, 1000, seed=8, depth=20)
    # original coordinates: [-3/2, 1/2 + 2]
    assert all(F(-3, 2) <= v <= F(1, 2) + 2 for v in batch.values)


def test_nonzero_minima_samples_are_points_of_the_set():
    from subsums import cover

    m = Model.uniform(2, [(1, 2)])  # M = [1, 2]
    batch = sample(m, 500, seed=6, depth=10)
    assert batch.shift == 1
    assert all(1 <= v <= 2 - F(1, 2**10) + F(1, 2**10) for v in batch.values)
    c = cover(m, 6)
    assert all(c.contains(v) for v in batch.values)
    assert batch.bias == F(1, 2**10)
