from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kwall.errors import RangeError, UnknownWalls
from kwall.walls import (BETA_WALLS, C_WALLS, CATALOG, T_WALLS, beta_from_coeff, c_walls, catalog_row,
                         chamber_of, slope_from_beta, slope_from_coeff, slope_from_hilbert, t_walls, wall_table)


def test_wall_lists_aligned():
    assert len(C_WALLS) == len(T_WALLS) == len(BETA_WALLS) == 8
    for c, t, b in zip(C_WALLS, T_WALLS, BETA_WALLS):
        assert t == 3 * c / (2 * c + 2) == slope_from_coeff(c, 4)
        assert b == min(F(1), (1 - 2 * c) / (6 * c)) == beta_from_coeff(c)


def test_examples():
    assert slope_from_coeff(F(1, 8)) == F(1, 6)
    assert slope_from_coeff(0) == 0
    assert slope_from_beta(0) == F(1, 2) and slope_from_beta(1) == F(1, 6)
    assert beta_from_coeff(F(1, 8)) == 1 and beta_from_coeff(F(1, 2)) == 0
    assert slope_from_hilbert(4) == F(1, 10)


def test_hilbert_limit():
    # (m-3)^2 / (2(m^2-4m+5)) increases towards 1/2
    vals = [slope_from_hilbert(m) for m in range(4, 60)]
    assert vals == sorted(vals) and vals[-1] < F(1, 2)


def test_range_errors():
    with pytest.raises(RangeError):
        beta_from_coeff(0)
    with pytest.raises(RangeError):
        slope_from_beta(F(3, 2))
    with pytest.raises(RangeError):
        slope_from_hilbert(3)
    with pytest.raises(RangeError):
        chamber_of(F(1, 2))


def test_chambers():
    ch = chamber_of(F(3, 20))
    assert (ch.kind, ch.lo, ch.hi) == ("Open", F(1, 8), F(1, 5))
    assert chamber_of(F(1, 4)).kind == "Wall" and chamber_of(F(1, 4)).index == 3
    assert chamber_of(F(1, 100)).index == 0
    assert chamber_of(F(1, 20), 5).hi == F(1, 10)
    with pytest.raises(UnknownWalls):
        chamber_of(F(1, 5), 5)


def test_other_degrees():
    assert c_walls(6) == (F(1, 12),)
    assert t_walls(6)[-1] == F(1, 3)


def test_catalog():
    assert len(CATALOG) == 7
    assert catalog_row(1).minus_side == "quadruple conic"
    assert catalog_row(7).c == F(4, 11) and catalog_row(7).plus_side == "A_7"
    with pytest.raises(RangeError):
        catalog_row(8)
    assert [r.c for r in CATALOG] == list(C_WALLS[:7])
    assert wall_table(4)["rows"][0]["c"] == "1/8"


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=F(1, 8), max_value=F(1, 2), max_denominator=1000))
def test_composition(c):
    assert slope_from_beta(beta_from_coeff(c)) == slope_from_coeff(c)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=0, max_value=F(1, 2), max_denominator=500))
def test_chamber_contains_point(c):
    if c == 0 or c == F(1, 2):
        return
    ch = chamber_of(c)
    assert ch.lo <= c <= ch.hi
    assert (ch.kind == "Wall") == (c in C_WALLS)
