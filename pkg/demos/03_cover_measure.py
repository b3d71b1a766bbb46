"""Upper bounds on the Lebesgue measure of the subsum set.

At level n every digit prefix gives an interval [r/s^n, r/s^n + tail],
where tail is the largest possible remainder. Their union covers the set,
and its total length can only shrink as n grows.
"""

from subsums import cover, cover_sequence, example_model

for name in ("ternary_015_uniform", "ternary_013_uniform", "binary_uniform"):
    model = example_model(name)
    print(name)
    for n, count, length in cover_sequence(model, 10):
        print(f"  n={n:2d} intervals={count:5d} length={float(length):.6f}")

print("level-1 cover of digits (0,1,5):", cover(example_model("ternary_015_uniform"), 1).intervals)
