"""Lattice paths: levels, enumeration, area, runs, sweep, maj."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratcat.paths import (
    DyckPath,
    SweepContractError,
    area,
    count_by_runs,
    count_dyck,
    cyclic_shift,
    east_counts,
    enumerate_dyck,
    enumerate_dyck_words,
    is_dyck,
    levels,
    maj,
    max_area,
    run_structure,
    sweep,
)

COPRIME = [(1, 1), (1, 4), (2, 3), (3, 2), (3, 5), (5, 3), (4, 7), (5, 8)]


def test_levels_example():
    assert levels("NNEENENEEENEE", 5, 8) == [
        0, 8, 16, 11, 6, 14, 9, 17, 12, 7, 2, 10, 5, 0,
    ]


def test_dyck_validation():
    DyckPath("NNENNEENEEEEE", 5, 8)
    with pytest.raises(ValueError):
        DyckPath("ENNEE", 2, 3)  # dips below
    with pytest.raises(ValueError):
        DyckPath("NNEEE", 3, 2)  # wrong counts


def test_is_dyck():
    assert is_dyck("NENEE", 2, 3)
    assert not is_dyck("NEENE", 2, 3)


def test_enumeration_matches_count():
    for a, b in COPRIME:
        got = list(enumerate_dyck(a, b))
        assert len(got) == count_dyck(a, b)
        assert len({d.word for d in got}) == len(got)


def test_area_examples():
    assert area(DyckPath("NNENNEENEEEEE", 5, 8)) == 9
    assert area(DyckPath("NNENNEENEE", 5, 5)) == 5
    for a, b in COPRIME:
        assert area(DyckPath("N" * a + "E" * b, a, b)) == max_area(a, b)
        staircase = min(area(d) for d in enumerate_dyck(a, b))
        assert staircase == 0


def test_east_counts():
    assert east_counts("NNENNEENEEEEE") == [0, 0, 1, 1, 3]


def test_run_structure():
    assert run_structure("NNENNEENEEEEE") == (5, 1, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        run_structure("NNE" + "N")  # must end in E


def test_count_by_runs_partition_of_total():
    for a, b in [(3, 5), (4, 7), (5, 8)]:
        seen = {}
        for d in enumerate_dyck(a, b):
            m = run_structure(d.word)
            seen[m] = seen.get(m, 0) + 1
        for m, c in seen.items():
            assert count_by_runs(a, b, m) == c


def test_sweep_examples():
    assert sweep(DyckPath("NENEENEE", 3, 5)).word == "NNNEEEEE"
    assert sweep(DyckPath("NENENEEE", 3, 5)).word == "NNENEEEE"
    assert sweep(DyckPath("NNENNEENEEEEE", 5, 8)).word == "NENENEENNEEEE"


def test_sweep_full_3_5_table():
    table = {
        "NENENEEE": "NNENEEEE",
        "NNENEEEE": "NENENEEE",
        "NENEENEE": "NNNEEEEE",
        "NNNEEEEE": "NENEENEE",
        "NENNEEEE": "NNEEENEE",
        "NNEEENEE": "NNEENEEE",
        "NNEENEEE": "NENNEEEE",
    }
    for src, dst in table.items():
        assert sweep(DyckPath(src, 3, 5)).word == dst


def test_sweep_requires_coprime():
    with pytest.raises(ValueError):
        sweep(DyckPath("NNEE", 2, 2))


def test_sweep_is_injective_small():
    for a, b in COPRIME:
        images = {sweep(d).word for d in enumerate_dyck(a, b)}
        assert len(images) == count_dyck(a, b)


def test_sweep_contract_error_type():
    assert issubclass(SweepContractError, RuntimeError)


@settings(max_examples=50)
@given(st.text(alphabet="NE", min_size=1, max_size=12), st.integers(0, 11))
def test_cyclic_shift_round_trip(w, k):
    assert cyclic_shift(cyclic_shift(w, k), len(w) - k % len(w)) == w


def test_maj_and_dyck_words():
    words = list(enumerate_dyck_words(3))
    assert len(words) == 5
    assert maj("010011") == 2  # descent at position 2
    with pytest.raises(ValueError):
        maj("0110")  # prefix dips
