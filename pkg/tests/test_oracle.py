from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqtilings.oracle import BoardTooLarge, brute_force_counts
from sqtilings.series import count_table


def test_headline_board():
    table = brute_force_counts(2, 3, 5)
    assert table.counts == (1, 8, 12)
    assert table.counts[2] == 12


def test_known_counts():
    assert brute_force_counts(2, 4, 5).counts == (1, 12, 37, 34, 9)
    assert brute_force_counts(3, 6, 6).counts == (1, 16, 30, 12, 1)


def test_unit_squares_are_binomials():
    for n, m in [(1, 5), (3, 4), (6, 6)]:
        counts = brute_force_counts(1, n, m).counts
        assert counts == tuple(comb(n * m, k) for k in range(n * m + 1))


def test_rotation():
    assert brute_force_counts(2, 3, 6).counts == brute_force_counts(2, 6, 3).counts


def test_empty_length():
    assert brute_force_counts(2, 4, 0).counts == (1,)


def test_cell_cap():
    with pytest.raises(BoardTooLarge) as err:
        brute_force_counts(2, 9, 8)
    assert err.value.cells == 72
    assert err.value.cap == 64
    # raising the cap admits the same board
    assert brute_force_counts(2, 9, 8, cell_cap=72).counts[0] == 1


@settings(deadline=None, max_examples=40)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=0, max_value=5),
)
def test_agrees_with_transfer_matrix(s, n, m):
    assert brute_force_counts(s, n, m).counts == count_table(s, n, m).counts
