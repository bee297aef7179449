import pytest

from permutomino.census import census_by_class, closed_convex_polyominoes, closed_stack, count
from permutomino.eco import iter_permutominoes
from permutomino.grid import classify, is_convex, is_permutomino
from permutomino.oracle import (
    classify_pairs,
    convex_totals_by_semiperimeter,
    count_pair_permutominoes,
    count_permutominoes,
    enumerate_convex,
    iter_permutomino_survivors,
)

# per-box convex-polyomino counts, pinned after the semi-perimeter totals
# below certified the enumerator against the closed form
PER_BOX = {
    (1, 1): 1,
    (2, 2): 5,
    (2, 3): 13,
    (3, 3): 68,
    (3, 4): 222,
    (4, 4): 1110,
}


def test_enumerate_convex_per_box_fixtures():
    for (rows, cols), expected in PER_BOX.items():
        assert enumerate_convex(rows, cols) == expected
        assert enumerate_convex(cols, rows) == expected  # transpose symmetry


def test_enumerate_convex_single_row():
    for cols in range(1, 6):
        assert enumerate_convex(1, cols) == 1


def test_enumerate_convex_rejects_bad_box():
    with pytest.raises(ValueError):
        enumerate_convex(0, 3)


def test_enumerated_shapes_are_convex_and_fill_the_box():
    shapes = []
    enumerate_convex(3, 4, shapes.append)
    assert len(shapes) == len(set(shapes)) == PER_BOX[(3, 4)]
    for cols in shapes:
        assert is_convex(cols)
        assert min(lo for lo, _ in cols) == 1
        assert max(hi for _, hi in cols) == 3


def test_semiperimeter_totals_match_closed_form():
    # semi-perimeters 2..12 certify the enumerator (and its pruning)
    got = convex_totals_by_semiperimeter(10)
    assert got == [closed_convex_polyominoes(m) for m in range(11)]
    assert got[:8] == [1, 2, 7, 28, 120, 528, 2344, 10416]


def test_permutomino_counts_match_census():
    for n in range(1, 7):
        assert count_permutominoes(n) == count(n)


def test_fast_and_slow_oracles_agree():
    for n in range(1, 6):
        assert count_permutominoes(n, fast=True) == count_permutominoes(n, fast=False)


def test_survivors_match_generator_sets():
    for n in range(1, 7):
        brute = {p.cols for p in iter_permutomino_survivors(n)}
        generated = {p.cols for p in iter_permutominoes(n)}
        assert brute == generated


def test_survivor_class_split_at_three():
    split = {"B": 0, "R": 0, "G": 0}
    for p in iter_permutomino_survivors(3):
        split[classify(p).group] += 1
    assert (split["B"], split["R"], split["G"]) == (4, 12, 2) == census_by_class(3)


def test_stack_shaped_survivors():
    for n in range(1, 6):
        stacks = sum(1 for p in iter_permutomino_survivors(n) if classify(p).group == "B")
        assert stacks == closed_stack(n)


def test_pair_oracle_counts():
    assert count_pair_permutominoes(1) == 1
    assert count_pair_permutominoes(2) == 4
    assert count_pair_permutominoes(3) == 18
    assert count_pair_permutominoes(4) == 84


# outcome histograms over all pointwise-distinct ordered pairs, pinned from
# the exhaustive classification; every valid convex shape is hit by exactly
# two ordered pairs, so the valid-convex column is twice the count sequence
PAIR_FIXTURES = {
    # n: (total, valid_convex, valid_nonconvex, disconnected, self_intersecting)
    1: (2, 2, 0, 0, 0),
    2: (12, 8, 0, 0, 4),
    3: (216, 36, 16, 44, 120),
    4: (5280, 168, 312, 736, 4064),
}


@pytest.mark.parametrize("n", sorted(PAIR_FIXTURES))
def test_pair_classification_fixtures(n):
    c = classify_pairs(n)
    got = (
        c.total_pairs,
        c.valid_convex_pairs,
        c.valid_nonconvex_pairs,
        c.disconnected_pairs,
        c.self_intersecting_pairs,
    )
    assert got == PAIR_FIXTURES[n]
    assert c.valid_convex_pairs == 2 * c.distinct_convex
    assert c.distinct_convex == count(n)
    for cols in c.convex_forms:
        assert is_convex(cols) and is_permutomino(cols)
