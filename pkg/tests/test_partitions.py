"""Partition statistics: frontiers, h windows, orbits."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratcat.partitions import (
    arm_leg,
    conjugate,
    cshift_partition,
    enumerate_box,
    enumerate_triangle,
    frontier,
    h_minus,
    h_plus,
    h_via_levels,
    in_triangle,
    lem3_check,
    min_level,
    multiplicities,
    normalize,
    orbit,
    orbit_decompose,
    partition_of_frontier,
    partitions_of,
    size,
    z_lambda,
)

partition_st = st.lists(
    st.integers(0, 6), min_size=0, max_size=6
).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_normalize():
    assert normalize((3, 2, 0, 0)) == (3, 2)
    assert normalize(()) == ()
    with pytest.raises(ValueError):
        normalize((1, 2))


@settings(max_examples=50)
@given(partition_st)
def test_conjugate_involution(mu):
    assert conjugate(conjugate(mu)) == normalize(mu)
    assert size(conjugate(mu)) == size(mu)


def test_partitions_of_reverse_lex():
    got = list(partitions_of(4))
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_z_lambda():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((3,)) == 3
    assert z_lambda((2, 1)) == 2
    assert multiplicities((2, 2, 1)) == {2: 2, 1: 1}


def test_box_count():
    from math import comb

    for s in range(6):
        for r in range(6):
            assert sum(1 for _ in enumerate_box(s, r)) == comb(s + r, s)


def test_triangle_3_5():
    got = sorted(enumerate_triangle(3, 5))
    assert got == [(), (1,), (1, 1), (2,), (2, 1), (3,), (3, 1)]
    assert not in_triangle((4,), 3, 5)


def test_frontier_examples():
    assert frontier((6, 3, 2), 5, 8) == "NNEENENEEENEE"
    assert frontier((3, 3), 2, 3) == "EEENN"
    assert frontier((), 3, 5) == "NNNEEEEE"


@settings(max_examples=50)
@given(partition_st)
def test_frontier_round_trip(mu):
    mu = normalize(mu)
    a = max(len(mu), 1)
    b = max(mu[0] if mu else 0, 1)
    assert partition_of_frontier(frontier(mu, a, b), a, b) == mu


def test_arm_leg():
    # (6,3,2): cell (1,1) has arm 5, leg 2
    assert arm_leg((6, 3, 2), (1, 1)) == (5, 2)
    assert arm_leg((6, 3, 2), (3, 2)) == (0, 0)


def test_h_statistics_example():
    assert size((6, 3, 2)) == 11
    assert h_plus((6, 3, 2), 5, 8) == 9
    assert h_minus((6, 3, 2), 5, 8) == 9


def test_h_via_levels_agrees():
    for a, b in [(2, 3), (3, 5), (4, 6), (5, 8)]:
        for mu in enumerate_box(a, b):
            assert h_plus(mu, a, b) == h_via_levels(mu, a, b, "+")
            assert h_minus(mu, a, b) == h_via_levels(mu, a, b, "-")


def test_min_level():
    assert min_level((3, 3), 2, 3) == -6
    for mu in enumerate_box(3, 5):
        assert (min_level(mu, 3, 5) == 0) == in_triangle(mu, 3, 5)


def test_cyclic_shift_orbits():
    members = orbit((), 2, 3)
    assert len(members) == 5
    assert len(set(members)) == 5
    nxt = cshift_partition((), 2, 3)
    assert nxt in members


def test_orbit_decompose_covers_box():
    for a, b in [(2, 3), (3, 5), (4, 7), (5, 8)]:
        orbits = orbit_decompose(a, b)
        total = sum(len(m) for _, m in orbits)
        assert total == sum(1 for _ in enumerate_box(a, b))


def test_lem3_fine_indexing():
    for a, b in [(2, 3), (3, 5), (5, 8)]:
        for mu0 in enumerate_triangle(a, b):
            assert lem3_check(mu0, a, b)
