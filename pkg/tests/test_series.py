import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqtilings.series import (
    CountTable,
    count_table,
    paper_line,
    row_sum_sequence,
    square_table,
    table_record,
    tables_to_csv,
)


def test_headline_board():
    table = count_table(2, 3, 5)
    assert table.counts == (1, 8, 12)
    assert table.row_sum == 21


@pytest.mark.parametrize(
    "s,n,m,expected",
    [
        (2, 2, 5, (1, 4, 3)),
        (2, 3, 3, (1, 4)),
        (2, 4, 4, (1, 9, 16, 8, 1)),
        (2, 4, 5, (1, 12, 37, 34, 9)),
        (3, 6, 6, (1, 16, 30, 12, 1)),
    ],
)
def test_known_tables(s, n, m, expected):
    assert count_table(s, n, m).counts == expected


def test_empty_and_tiny_boards():
    assert count_table(2, 3, 0).counts == (1,)
    assert count_table(2, 1, 7).counts == (1,)
    assert count_table(5, 4, 9).counts == (1,)
    with pytest.raises(ValueError):
        count_table(2, 3, -1)


def test_counts_trimmed_to_max_achieved():
    # 3 x 3 with a 2 x 2 square: a second square never fits even though
    # the area bound allows k = 2
    table = count_table(2, 3, 3)
    assert table.counts[-1] != 0
    assert table.max_squares == 2
    assert len(table.counts) == 2


def test_row_sum_sequence_matches_tables():
    seq = row_sum_sequence(2, 4, 8)
    assert seq == tuple(count_table(2, 4, m).row_sum for m in range(9))


def test_fibonacci_row_sums():
    seq = row_sum_sequence(2, 2, 12)
    assert seq[0] == seq[1] == 1
    for m in range(2, 13):
        assert seq[m] == seq[m - 1] + seq[m - 2]


def test_jacobsthal_row_sums():
    seq = row_sum_sequence(2, 3, 12)
    assert seq == tuple((2 ** (m + 1) + (-1) ** m) // 3 for m in range(13))
    assert seq[4] == 11


def test_lag_three_row_sums():
    seq = row_sum_sequence(3, 3, 12)
    assert seq[:9] == (1, 1, 1, 2, 3, 4, 6, 9, 13)


def test_single_lane_binomial_counts():
    for s in (2, 3, 4):
        for m in range(0, 3 * s + 1):
            counts = count_table(s, s, m).counts
            for k, c in enumerate(counts):
                assert c == comb(m - (s - 1) * k, k)


@settings(deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=7),
)
def test_rotation_symmetry(s, n, m):
    if m == 0:
        return
    assert count_table(s, n, m).counts == count_table(s, m, n).counts


def test_truncated_iteration_is_exact():
    plain = count_table(2, 5, 9)
    trimmed = count_table(2, 5, 9, truncate=True)
    assert plain == trimmed


def test_square_table():
    tables = square_table(2, 4)
    assert [t.m for t in tables] == [1, 2, 3, 4]
    assert tables[1].counts == (1, 1)
    assert tables[2].counts == (1, 4)
    assert tables[3].counts == (1, 9, 16, 8, 1)


def test_paper_line_format():
    assert paper_line(count_table(2, 3, 5)) == "2 3 5 : 1 8 12 : 21"
    assert paper_line(count_table(2, 2, 0)) == "2 2 0 : 1 : 1"


def test_csv_format():
    text = tables_to_csv([count_table(2, 3, 3)])
    assert text == "s,n,m,k,count\n2,3,3,0,1\n2,3,3,1,4\n"


def test_json_record():
    rec = table_record(count_table(2, 3, 5))
    assert rec == {"s": 2, "n": 3, "m": 5, "counts": [1, 8, 12], "row_sum": 21}
    json.dumps(rec)  # stays serializable


def test_count_table_is_value_object():
    a = count_table(2, 3, 5)
    b = CountTable(2, 3, 5, (1, 8, 12))
    assert a == b
    with pytest.raises(AttributeError):
        a.counts = ()
