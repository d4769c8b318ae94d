# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fusible import erring
from fusible import exact
from fusible.exact import ExtendedRational, UnaryAffine, PLUS_INFINITY, MINUS_INFINITY


def test_field_arithmetic():
    assert exact.rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert exact.rat_sub(Fraction(1, 2), Fraction(1, 2)) == 0
    assert exact.rat_mul(Fraction(2, 3), 3) == 2
    assert exact.rat_div(Fraction(7, 8), Fraction(1, 8)) == 7


def test_division_by_zero_is_reported():
    with pytest.raises(erring.DivisionByZeroError):
        exact.rat_div(1, 0)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        exact.to_rational(0.5)
    with pytest.raises(TypeError):
        exact.to_rational(True)


@pytest.mark.parametrize('slope, offset, fix', [
    (Fraction(1, 2), Fraction(1, 2), 1),
    (Fraction(1, 3), Fraction(1, 3), Fraction(1, 2)),
    (0, 5, 5),
])
def test_fixpoint(slope, offset, fix):
    h = UnaryAffine(slope, offset)
    assert exact.fixpoint(h) == fix
    assert h(fix) == fix


def test_fixpoint_needs_contraction():
    with pytest.raises(erring.NoFixedPointError):
        exact.fixpoint(UnaryAffine(1, 1))


def test_iterate_to_fix():
    third = Fraction(1, 3)
    assert exact.iterate_to_fix(UnaryAffine(third, third), 0, 3) == [0, Fraction(1, 3), Fraction(4, 9), Fraction(13, 27)]
    half = Fraction(1, 2)
    assert exact.iterate_to_fix(UnaryAffine(half, half), 0, 2) == [0, Fraction(1, 2), Fraction(3, 4)]
    assert exact.iterate_to_fix(UnaryAffine(half, half), Fraction(1, 4), 0) == [Fraction(1, 4)]


def test_iterate_to_fix_preconditions():
    half = Fraction(1, 2)
    with pytest.raises(erring.PreconditionError):
        exact.iterate_to_fix(UnaryAffine(half, half), 1, 3)
    with pytest.raises(erring.PreconditionError):
        exact.iterate_to_fix(UnaryAffine(1, half), 0, 3)
    with pytest.raises(erring.PreconditionError):
        exact.iterate_to_fix(UnaryAffine(half, half), 0, -1)


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=Fraction(1, 50), max_value=Fraction(9, 10), max_denominator=50),
       st.fractions(min_value=Fraction(1, 50), max_value=10, max_denominator=50),
       st.integers(min_value=0, max_value=8))
def test_orbit_increases_below_fixpoint(slope, offset, steps):
    h = UnaryAffine(slope, offset)
    fix = exact.fixpoint(h)
    x0 = fix - 1
    orbit = exact.iterate_to_fix(h, x0, steps)
    assert all(a < b for a, b in zip(orbit, orbit[1:]))
    assert all(x < fix for x in orbit)


def test_limit_point():
    half = Fraction(1, 2)
    assert exact.limit_point(UnaryAffine(half, half), 0) == 1
    assert exact.limit_point(UnaryAffine(1, 1), 0) == PLUS_INFINITY
    with pytest.raises(erring.PreconditionError):
        exact.limit_point(UnaryAffine(half, 0), 0)


@settings(max_examples=300, deadline=None)
@given(st.fractions())
def test_canonical_text_round_trip(q):
    text = exact.format_rational(q)
    assert '/' in text
    assert exact.parse_rational(text) == q


@pytest.mark.parametrize('text, value', [
    ('3', Fraction(3)),
    ('-6/4', Fraction(-3, 2)),
    ('+1/2', Fraction(1, 2)),
    (' 0/7 ', Fraction(0)),
])
def test_parse_rational(text, value):
    assert exact.parse_rational(text) == value


@pytest.mark.parametrize('text', ['1 / 2', '1/0', '0.5', '', '1/-2', 'inf'])
def test_parse_rational_rejects(text):
    with pytest.raises(erring.DecodingError):
        exact.parse_rational(text)


def test_parse_extended_rational():
    assert exact.parse_extended_rational('+inf') == PLUS_INFINITY
    assert exact.parse_extended_rational('-inf') == MINUS_INFINITY
    assert exact.parse_extended_rational('5/10') == Fraction(1, 2)


def test_extended_order():
    assert MINUS_INFINITY < Fraction(-10**9) < PLUS_INFINITY
    assert ExtendedRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(ExtendedRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert exact.extended_min(PLUS_INFINITY, 3, Fraction(5, 2)) == Fraction(5, 2)
    assert str(PLUS_INFINITY) == '+inf'
    assert str(ExtendedRational(2)) == '2/1'


def test_extended_arithmetic():
    assert PLUS_INFINITY + 1 == PLUS_INFINITY
    assert MINUS_INFINITY - 1 == MINUS_INFINITY
    assert PLUS_INFINITY * Fraction(1, 3) == PLUS_INFINITY
    assert (ExtendedRational(1) - Fraction(1, 4)) / Fraction(1, 2) == Fraction(3, 2)
    assert 1 - MINUS_INFINITY == PLUS_INFINITY


@pytest.mark.parametrize('compute', [
    lambda: PLUS_INFINITY - PLUS_INFINITY,
    lambda: PLUS_INFINITY + MINUS_INFINITY,
    lambda: MINUS_INFINITY * 0,
    lambda: ExtendedRational(1) / PLUS_INFINITY,
])
def test_undefined_extended_arithmetic(compute):
    with pytest.raises(erring.ExtendedArithmeticError):
        compute()
