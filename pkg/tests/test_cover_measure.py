from fractions import Fraction as F

import pytest

from subsums import InvariantViolation, Model, ResourceGuardError, cover, cover_sequence, merge_intervals, tail_sup
from subsums.atoms import decomposition
from subsums.digit_system import from_columns, normalize


def cover_oracle(model, n):
    """Candidate intervals from explicit digit tuples, merged pairwise."""
    norm, _ = normalize(model)
    t = tail_sup(norm, n)
    cands = {c for c, _ in decomposition(norm, n)}
    return merge_intervals([(c, c + t) for c in cands])


def test_ternary_level_one(ternary015):
    c = cover(ternary015, 1)
    assert c.intervals == [(0, F(7, 6)), (F(5, 3), F(5, 2))]
    assert c.total_length == 2
    assert merge_intervals([(0, F(5, 6)), (F(1, 3), F(7, 6)), (F(5, 3), F(5, 2))]) == c.intervals


def test_level_zero(ternary015):
    c = cover(ternary015, 0)
    assert c.intervals == [(0, F(5, 2))]


@pytest.mark.parametrize("n", [0, 1, 5, 9])
def test_binary_full_interval(binary, n):
    c = cover(binary, n)
    assert c.intervals == [(0, 1)] and c.total_length == 1


@pytest.mark.parametrize("n", range(0, 7))
def test_cover_matches_oracle(ternary015, n):
    assert cover(ternary015, n).intervals == cover_oracle(ternary015, n)


def test_cover_rational_digits_matches_oracle():
    m = from_columns(3, [(0, F(1, 2), F(7, 3)), (0, 1, F(5, 4))], prefix_len=1)
    for n in range(5):
        assert cover(m, n).intervals == cover_oracle(m, n)


def test_cover_shift_and_membership():
    m = Model.uniform(2, [(-1, 0)])
    c = cover(m, 3)
    assert c.shift == -1
    assert c.shifted_intervals() == [(-1, 0)]
    assert c.contains(F(-1, 2)) and not c.contains(F(1, 10))
    assert c.contains(F(1, 10), slack=F(1, 10))


def test_merge_intervals_examples():
    assert merge_intervals([(0, 2), (1, 3)]) == [(0, 3)]
    assert merge_intervals([(0, 1), (1, 2)]) == [(0, 2)]
    assert merge_intervals([(0, 1), (2, 3)]) == [(0, 1), (2, 3)]
    assert merge_intervals([]) == []
    assert merge_intervals([(0, 5), (1, 2), (3, 4)]) == [(0, 5)]


def test_sequence_ternary(ternary015):
    seq = cover_sequence(ternary015, 12)
    lengths = [length for _, _, length in seq]
    assert lengths[:2] == [F(5, 2), 2]
    assert all(a >= b for a, b in zip(lengths, lengths[1:]))
    assert all(length >= 1 for length in lengths)
    for n, count, length in seq[:8]:
        c = cover(ternary015, n)
        assert (count, length) == (len(c.intervals), c.total_length)


def test_sequence_binary_constant(binary):
    assert [length for _, _, length in cover_sequence(binary, 10)] == [1] * 11


def test_sequence_rejects_duplicates():
    with pytest.raises(ValueError):
        cover_sequence(Model.uniform(3, [(0, 0, 0)]), 3)


def test_guard(ternary015):
    with pytest.raises(ResourceGuardError):
        cover(ternary015, 30)


def test_nesting(ternary015):
    m = from_columns(3, [(0, 2, 7), (0, 1, 5), (0, 4, 8)], prefix_len=1)
    for model in (ternary015, m):
        for n in range(6):
            parent = cover(model, n)
            child = cover(model, n + 1)
            for lo, hi in child.intervals:
                assert parent.contains(lo) and parent.contains(hi)


def test_invariant_violation_is_assertion():
    assert issubclass(InvariantViolation, AssertionError)
