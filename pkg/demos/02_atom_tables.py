"""Exact atoms of the truncated series for digits (0, 1, 5) in base 3.

The level-n table lists, for each integer offset r, the total probability
that the first n digits sum to r / 3^n. Because (0, 1, 5) is a complete
residue system mod 3, no two digit strings collide and every atom has mass
exactly 3^-n.
"""

from subsums import brute_force_table, example_model, max_mass, table_at

model = example_model("ternary_015_uniform")

for n in range(0, 9):
    t = table_at(model, n)
    print(f"n={n}: {len(t):5d} atoms, max mass = {max_mass(t)}, total = {t.total_mass}")

print("level 2 offsets:", list(table_at(model, 2).masses))
assert table_at(model, 5).masses == brute_force_table(model, 5).masses
print("recursion agrees with brute-force enumeration at level 5")

# With digits (0, 1) then (0, 2) offsets collide and masses add up.
from subsums.digit_system import from_columns

colliding = from_columns(2, [(0, 1), (0, 2)], prefix_len=1)
print("colliding model, level 2:", dict(table_at(colliding, 2).masses))
