# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusible import erring
from fusible import veblenstar
from fusible.veblenstar import STAR_ZERO, application


Z = STAR_ZERO
V = application(Z, Z, Z)
SMALL = veblenstar.star_enumerate(3, 3)
small_terms = st.sampled_from(SMALL)
LARGER = veblenstar.star_enumerate(3, 4)
larger_terms = st.sampled_from(LARGER)


def test_construction():
    assert Z.is_zero
    assert Z.size == 0
    assert V.size == 1
    assert V.arity == 3
    assert V.to_sexpr() == '(V 0 0 0)'
    assert application(V, Z, Z).to_sexpr() == '(V (V 0 0 0) 0 0)'
    assert veblenstar.star_successor(V, 3) == application(Z, Z, V)


def test_arity_errors():
    with pytest.raises(erring.ArityError):
        application(Z, Z)
    v4 = application(Z, Z, Z, Z)
    with pytest.raises(erring.ArityError):
        application(v4, Z, Z)
    with pytest.raises(erring.ArityError):
        veblenstar.star_compare(V, v4)
    with pytest.raises(TypeError):
        application(Z, Z, 0)
    with pytest.raises(TypeError):
        veblenstar.star_compare(V, 0)


def test_enumerate_smallest():
    assert veblenstar.star_enumerate(3, 1) == [Z, V]
    with pytest.raises(ValueError):
        veblenstar.star_enumerate(3, 0)
    with pytest.raises(ValueError):
        veblenstar.terms_by_size(2, 3)


def test_order_examples():
    succ_v = application(Z, Z, V)
    middle = application(Z, V, Z)
    first = application(V, Z, Z)
    assert veblenstar.star_compare(V, succ_v) == -1
    assert veblenstar.star_compare(succ_v, middle) == -1
    assert veblenstar.star_compare(middle, first) == -1
    assert veblenstar.star_compare(first, first) == 0
    assert veblenstar.star_compare(first, Z) == 1
    assert veblenstar.star_enumerate(3, 2) == [Z, V, succ_v, middle, first]


def test_counts_by_size():
    assert [len(level) for level in veblenstar.terms_by_size(3, 5)] == [1, 1, 3, 12, 55, 273]
    assert len(SMALL) == 17
    for level in veblenstar.terms_by_size(3, 3):
        assert [t.to_sexpr() for t in level] == sorted(t.to_sexpr() for t in level)


def test_enumeration_strictly_increasing():
    for a, b in zip(SMALL, SMALL[1:]):
        assert veblenstar.star_compare(a, b) == -1


def test_successor_is_next_in_enumeration():
    found = veblenstar.star_enumerate(3, 4)
    position = {t: k for k, t in enumerate(found)}
    for t in SMALL:
        assert position[veblenstar.star_successor(t, 3)] == position[t] + 1


def test_no_successor_gaps():
    assert veblenstar.successor_gaps(3, 3, 5) == []
    assert veblenstar.successor_gaps(4, 2, 3) == []


def test_star_compare_is_a_strict_total_order_exhaustively():
    order = {(a, b): veblenstar.star_compare(a, b) for a in SMALL for b in SMALL}
    for (a, b), ab in order.items():
        assert ab in (-1, 0, 1)
        assert (ab == 0) == (a == b)
        assert order[b, a] == -ab
    for a in SMALL:
        assert not veblenstar.star_less(a, a)
        for b in SMALL:
            for c in SMALL:
                if order[a, b] < 0 and order[b, c] < 0:
                    assert order[a, c] < 0, (a, b, c)


def test_sorted_positions_match_star_compare():
    assert len(LARGER) == 72
    for i, a in enumerate(LARGER):
        for j, b in enumerate(LARGER):
            assert veblenstar.star_compare(a, b) == (i > j) - (i < j)


@settings(max_examples=1000, deadline=None)
@given(larger_terms, larger_terms, larger_terms)
def test_total_order(a, b, c):
    ab = veblenstar.star_compare(a, b)
    assert ab == -veblenstar.star_compare(b, a)
    assert (ab == 0) == (a == b)
    if ab < 0 and veblenstar.star_compare(b, c) < 0:
        assert veblenstar.star_compare(a, c) < 0


@settings(max_examples=200, deadline=None)
@given(small_terms, small_terms, small_terms)
def test_application_exceeds_arguments(a, b, c):
    t = application(a, b, c)
    for arg in t.args:
        assert veblenstar.star_less(arg, t)


@settings(max_examples=200, deadline=None)
@given(small_terms, small_terms, small_terms, st.integers(min_value=0, max_value=2))
def test_monotone_in_each_argument(a, b, c, position):
    if not veblenstar.star_less(a, b):
        return
    low = [c, c, c]
    high = [c, c, c]
    low[position] = a
    high[position] = b
    assert veblenstar.star_less(application(*low), application(*high))
