"""Classify the shipped example models.

Each model is a digit/probability spec in base s. The verdict depends on
two infinite products over the columns: the product of the largest column
probability (positive only if the columns eventually become deterministic)
and the product of sum_j sqrt(p_j / s) (positive only if the columns are
eventually uniform).
"""

from subsums import classify, example_model
from subsums.modelio import EXAMPLE_MODELS

for name in EXAMPLE_MODELS:
    c = classify(example_model(name))
    print(f"{name:24s} {c.verdict.value:24s} "
          f"W>0={c.w_status.positive!s:5s} Q>0={c.q_status.positive!s:5s} "
          f"Q cycle factor={c.q_status.cycle_factor_decimal}")

# A skewed binary column: the Q factor is (1 + sqrt 3) / (2 sqrt 2) < 1,
# so the distribution is singular.
from fractions import Fraction as F
from subsums import Model

skewed = Model(2, [], [(0, 1)], [], [(F(1, 4), F(3, 4))])
print("skewed binary:", classify(skewed).verdict.value, classify(skewed).q_status.cycle_factor_decimal)
