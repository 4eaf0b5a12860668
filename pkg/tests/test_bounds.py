"""Sandwich bounds, exactness ranges, and TC lower-bound table structure."""

import pytest

from w23.bounds import (
    BoundsRow,
    TcBand,
    bounds_row,
    exactness_edge_disagreements,
    exactness_established,
    exceptional_degrees,
    height_z_w2,
    tc_table_bands,
    tc_table_rows,
    verify_ineq_arithmetic,
)
from w23.quotient import build_quotient, heights_closed_form
from w23.zcl import zcl_closed_form, zcl_wn


def _computed_zcl(n):
    return zcl_wn(build_quotient(n))


def test_exceptional_degrees_examples():
    assert exceptional_degrees(15) == (12, None)
    assert exceptional_degrees(24) == (28, 39)
    assert exceptional_degrees(20) == (27, 28)


def test_exceptional_degrees_absent_b():
    for t in (4, 5, 6):
        p = 1 << t
        for n in (p - 1, p, 2 * p - 3, 2 * p - 2):
            assert exceptional_degrees(n)[1] is None
    with_b = [n for n in range(15, 63) if exceptional_degrees(n)[1] is not None]
    assert len(with_b) == 48 - 8


def test_exceptional_degrees_sum_and_order():
    for n in range(15, 127):
        a, b = exceptional_degrees(n)
        if b is not None:
            assert a < b
            assert a + b == 3 * n - 5


def test_exceptional_degree_band_switch():
    # min{3n - 2^(t+1) - 1, 2^(t+1) - 4} switches branch exactly at the
    # integer edge 2^t + floor(2^t/3).
    for t in range(4, 11):
        p = 1 << t
        edge = p + p // 3
        for n in range(p - 1, 2 * p - 1):
            a, _ = exceptional_degrees(n)
            if n < edge:
                assert a == 3 * n - 2 * p - 1
            else:
                assert a == 2 * p - 4


def test_exceptional_degrees_reject_small_n():
    with pytest.raises(ValueError):
        exceptional_degrees(14)


def test_height_z_w2_matches_height_cap():
    for n in range(7, 127):
        h2 = heights_closed_form(n).h2
        assert height_z_w2(n) == (1 << h2.bit_length()) - 1
    with pytest.raises(ValueError):
        height_z_w2(6)


def test_exactness_ranges():
    exact4 = {n for n in range(15, 31) if exactness_established(n)}
    assert exact4 == set(range(15, 20)) | {29, 30}
    exact5 = {n for n in range(31, 63) if exactness_established(n)}
    assert exact5 == set(range(31, 39)) | set(range(57, 63))
    with pytest.raises(ValueError):
        exactness_established(14)


def test_exactness_edge_readings_agree():
    for t in range(4, 13):
        assert exactness_edge_disagreements(t) == []
    with pytest.raises(ValueError):
        exactness_edge_disagreements(3)


def test_bounds_row_examples():
    assert bounds_row(15, zcl_closed_form(15)) == BoundsRow(
        n=15,
        zcl_wn=20,
        zcl_oriented_lo=21,
        zcl_oriented_hi=22,
        zcl_oriented_exact=21,
        tc_lower=22,
        a_deg=12,
        b_deg=None,
    )
    row30 = bounds_row(30, zcl_closed_form(30))
    assert row30.zcl_oriented_exact == 1 + 42 == 43
    assert row30.tc_lower == 44
    row22 = bounds_row(22, zcl_closed_form(22))
    assert row22.zcl_oriented_exact is None
    assert (row22.zcl_oriented_lo, row22.zcl_oriented_hi) == (23, 24)


def test_bounds_row_invariants():
    for n in range(15, 127):
        row = bounds_row(n, zcl_closed_form(n))
        assert row.zcl_oriented_lo == 1 + row.zcl_wn
        assert row.zcl_oriented_hi == 2 + row.zcl_wn
        assert row.zcl_oriented_exact in (None, row.zcl_oriented_lo)
        assert row.tc_lower == 1 + row.zcl_oriented_lo
    with pytest.raises(ValueError):
        bounds_row(14, 16)


def test_bounds_row_computed_matches_closed_form():
    for n in range(15, 63):
        assert bounds_row(n, _computed_zcl(n)) == bounds_row(n, zcl_closed_form(n))


def test_ineq_holds_per_level():
    for t in range(4, 11):
        checks = verify_ineq_arithmetic(t)
        assert all(c.ok for c in checks), [c.line() for c in checks]
    with pytest.raises(ValueError):
        verify_ineq_arithmetic(3)


def test_ineq_rederived_exhaustively():
    for t in range(4, 11):
        p = 1 << t
        for n in range(p - 1, 2 * p - 1):
            a, _ = exceptional_degrees(n)
            assert 6 * n + height_z_w2(n) < 3 * (a + zcl_closed_form(n)) + 16


def test_ineq_display_constants():
    # On the merged band 2^t + 2^(t-1) + 1 <= n <= 13*2^(t-3) the two sides
    # peak at 94*2^(t-3) - 1 and bottom out at 99*2^(t-3) - 5.
    for t in range(4, 11):
        p = 1 << t
        unit = p >> 3
        band = range(p + p // 2 + 1, 13 * unit + 1)
        lhs_max = max(6 * n + height_z_w2(n) for n in band)
        rhs_min = min(
            3 * (exceptional_degrees(n)[0] + zcl_closed_form(n)) + 16 for n in band
        )
        assert lhs_max == 94 * unit - 1
        assert rhs_min == 99 * unit - 5
        assert lhs_max < rhs_min


def test_tc_table_t4():
    assert tc_table_rows(4) == [
        TcBand(15, 19, 20, 21, True, 22),
        TcBand(20, 20, 20, 21, False, 22),
        TcBand(21, 21, 21, 22, False, 23),
        TcBand(22, 24, 22, 23, False, 24),
        TcBand(25, 25, 31, 32, False, 33),
        TcBand(26, 26, 32, 33, False, 34),
        TcBand(27, 28, 34, 35, False, 36),
        TcBand(29, 30, 42, 43, True, 44),
    ]


def test_tc_table_band_structure():
    for t in range(4, 9):
        p = 1 << t
        bands = tc_table_bands(t)
        assert len(bands) == 7 + (t - 3)
        assert bands[0][0] == p - 1
        assert bands[-1][1] == 2 * p - 2
        for (_, last), (first, _) in zip(bands, bands[1:]):
            assert first == last + 1
        rows = tc_table_rows(t)
        assert rows[0].exact and rows[-1].exact
        assert all(not row.exact for row in rows[1:7])
        assert all(row.exact for row in rows[7:])
        expected_zcl = [
            p + p // 2 - 4,
            p + p // 2 - 4,
            p + p // 2 - 3,
            p + p // 2 - 2,
            2 * p + p // 8 - 3,
            2 * p + p // 8 - 2,
            2 * p + p // 4 - 2,
        ] + [3 * p - (1 << (s + 1)) - 2 for s in range(t - 3, 0, -1)]
        assert [row.zcl_wn for row in rows] == expected_zcl
        for row in rows:
            assert row.zcl_oriented_lo == row.zcl_wn + 1
            assert row.tc_lower == row.zcl_wn + 2
    with pytest.raises(ValueError):
        tc_table_bands(3)


def test_tc_table_computed_zcl_matches_closed_form():
    for t in (4, 5):
        assert tc_table_rows(t, zcl_fn=_computed_zcl) == tc_table_rows(t)


def test_tc_table_rejects_nonconstant_bands():
    with pytest.raises(RuntimeError):
        tc_table_rows(4, zcl_fn=lambda n: n)
