"""Exact CDF bounds checked against seeded Monte Carlo draws.

The bounds at level n sandwich P(psi < x); the empirical CDF of 10^5
samples should sit inside them up to the DKW band half-width.
"""

from fractions import Fraction as F

import numpy as np

from subsums import Model, band_check, cdf_curve, example_model, sample
from subsums.cdf import support_grid

model = example_model("ternary_015_uniform")
grid = support_grid(model, 6)
for b in cdf_curve(model, grid, 8):
    print(f"x={float(b.x):.3f}  {float(b.lo):.5f} <= F(x) <= {float(b.hi):.5f}")

batch = sample(model, 10**5, seed=1, depth=40)
print("sample mean:", batch.as_float().mean(), "exact mean:", float(F(1 + 5, 3) * F(1, 2)))
report = band_check(batch, model, 10, grid_size=101, alpha=0.01)
print("band check:", report.as_dict())

# Samples drawn from a different model are caught.
skewed = Model(2, [], [(0, 1)], [], [(F(3, 4), F(1, 4))])
wrong = band_check(sample(skewed, 10**5, seed=1, depth=40), example_model("binary_uniform"), 10)
print("mismatched pairing passes?", wrong.passed, "max violation", round(wrong.max_violation, 3))

values = np.sort(batch.as_float())
print("empirical quartiles:", np.quantile(values, [0.25, 0.5, 0.75]))
