from fractions import Fraction as F

import pytest

from subsums import InapplicableError, Model, brute_force_table, cdf_bounds, cdf_curve, lipschitz_check, tail_sup
from subsums.cdf import support_grid
from subsums.digit_system import normalize


def bounds_oracle(model, x, n):
    """lo/hi straight from the definition over the brute-force atoms."""
    norm, shift = normalize(model)
    t = brute_force_table(model, n)
    tail = tail_sup(norm, n)
    lo = hi = F(0)
    for r, m in t.masses.items():
        a = F(r, model.s**n) + shift
        if a + tail < x:
            lo += m
        if a < x:
            hi += m
    return lo, hi


def test_binary_half(binary):
    b = cdf_bounds(binary, F(1, 2), 4)
    assert (b.lo, b.hi) == (F(7, 16), F(1, 2))
    assert (b.lo, b.hi) == bounds_oracle(binary, F(1, 2), 4)


def test_outside_support(ternary015):
    for x in (F(-1), F(0)):
        b = cdf_bounds(ternary015, x, 3)
        assert b.lo == b.hi == 0
    b = cdf_bounds(ternary015, F(5, 2) + F(1, 1000), 3)
    assert b.lo == b.hi == 1


@pytest.mark.parametrize(
    "model",
    [
        Model.uniform(3, [(0, 1, 5)]),
        Model(3, [], [(0, 1, 5)], [], [(F(1, 2), F(1, 2), F(0))]),
        Model(2, [(3, 1)], [(0, 2), (-1, 4)], [(F(1, 3), F(2, 3))], [(F(1, 4), F(3, 4)), (F(1, 2), F(1, 2))]),
    ],
)
def test_matches_oracle(model):
    norm, shift = normalize(model)
    top = tail_sup(norm, 0)
    grid = [shift + top * F(i, 17) for i in range(-1, 19)]
    for n in (0, 1, 3, 5):
        for b in cdf_curve(model, grid, n):
            assert (b.lo, b.hi) == bounds_oracle(model, b.x, n)
            assert 0 <= b.lo <= b.hi <= 1


def test_support_endpoints(ternary015):
    grid = support_grid(ternary015, 11)
    assert grid[0] == 0 and grid[-1] == F(5, 2)
    curve = cdf_curve(ternary015, [grid[0], grid[-1] + F(1, 10**6)], 6)
    assert (curve[0].lo, curve[0].hi) == (0, 0)
    assert (curve[1].lo, curve[1].hi) == (1, 1)


def test_binary_brackets_identity(binary):
    n = 8
    grid = [F(i, 37) for i in range(38)]
    for b in cdf_curve(binary, grid, n):
        assert b.lo <= b.x <= b.hi
        assert b.width <= F(2, 2**n)


def test_singular_curve_flat_beyond_active_support():
    m = Model(3, [], [(0, 1, 5)], [], [(F(1, 2), F(1, 2), F(0))])
    # digits {0,1} only: every atom starts below sum 1/3^k = 1/2
    for n in (2, 5, 8):
        curve = cdf_curve(m, [F(1, 2), F(1), F(2)], n)
        assert [b.hi for b in curve] == [1, 1, 1]
        assert [b.lo for b in curve[1:]] == [1, 1]
    assert cdf_bounds(m, F(1, 2) - F(1, 10), 8).hi < 1


def test_monotone_tightening(ternary015):
    xs = [F(k, 13) for k in range(0, 33)]
    prev = None
    for n in range(0, 8):
        cur = cdf_curve(ternary015, xs, n)
        if prev:
            for a, b in zip(prev, cur):
                assert a.lo <= b.lo and b.hi <= a.hi
        prev = cur


def test_lipschitz_ratio(ternary015):
    r = lipschitz_check(ternary015, 8)
    assert r.ratio == 1 and r.holds
    assert lipschitz_check(ternary015, 0).ratio == 1
    assert lipschitz_check(Model.uniform(2, [(0, 3)]), 6).ratio == 1


def test_lipschitz_inapplicable():
    with pytest.raises(InapplicableError):
        lipschitz_check(Model.uniform(3, [(0, 1, 3)]), 3)
    with pytest.raises(InapplicableError):
        lipschitz_check(Model(2, [], [(0, 1)], [], [(F(1, 4), F(3, 4))]), 3)
