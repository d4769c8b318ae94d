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
from fusible import ordinals
from fusible.ordinals import ZERO, ONE, OMEGA, phi, finite


EPSILON_0 = phi(ONE, ZERO)
GAMMA_0 = phi(ONE, ZERO, ZERO)
TERMS = ordinals.enumerate_terms(3)
terms = st.sampled_from(TERMS)
TERNARY = ordinals.enumerate_terms(3, max_arity=3)
LARGER = ordinals.enumerate_terms(4, max_arity=3)
larger_terms = st.sampled_from(LARGER)


def plus(*parts):
    out = ZERO
    for p in parts:
        out = ordinals.nat_sum(out, p)
    return out


def test_constants():
    assert ZERO.is_zero
    assert ONE.to_sexpr() == '1'
    assert OMEGA.to_sexpr() == 'w'
    assert finite(3).to_sexpr() == '3'
    assert EPSILON_0.to_sexpr() == '(phi 1 0)'
    assert phi(ZERO, ONE, ZERO) == EPSILON_0
    assert GAMMA_0.to_sexpr() == '(phi 1 0 0)'


@pytest.mark.parametrize('a, b, expected', [
    (phi(ZERO, ONE), EPSILON_0, -1),
    (phi(ZERO, ONE, ZERO), GAMMA_0, -1),
    (EPSILON_0, OMEGA, 1),
    (finite(2), OMEGA, -1),
    (plus(OMEGA, ONE), OMEGA, 1),
    (phi(ONE, ONE), phi(finite(2), ZERO), -1),
    (phi(ZERO, EPSILON_0), EPSILON_0, 0),
])
def test_compare_examples(a, b, expected):
    a = ordinals.normalize(a)
    b = ordinals.normalize(b)
    assert ordinals.compare(a, b) == expected
    assert ordinals.compare(b, a) == -expected


def test_compare_self():
    w_w = ordinals.omega_power(OMEGA)
    t = plus(w_w, OMEGA)
    assert t.to_sexpr() == '(+ (phi 0 w) w)'
    assert ordinals.compare(t, t) == 0


def test_operators():
    assert OMEGA > ONE
    assert ZERO <= ZERO
    assert EPSILON_0 >= OMEGA
    assert not OMEGA < OMEGA


def test_normal_form():
    one_plus_omega = ordinals.OrdinalTerm(ONE.summands + OMEGA.summands)
    assert not ordinals.is_normal_form(one_plus_omega)
    assert ordinals.normalize(one_plus_omega) == OMEGA
    absorbed = phi(ZERO, EPSILON_0)
    assert not ordinals.is_normal_form(absorbed)
    assert ordinals.normalize(absorbed) == EPSILON_0
    with pytest.raises(erring.NormalFormError):
        ordinals.compare(one_plus_omega, OMEGA)
    with pytest.raises(erring.NormalFormError):
        ordinals.nat_sum(ONE, absorbed)


def test_construction_errors():
    with pytest.raises(erring.ArityError):
        phi(ONE)
    with pytest.raises(TypeError):
        phi(1, 0)
    with pytest.raises(erring.DomainError):
        finite(-1)
    with pytest.raises(TypeError):
        ordinals.compare(ONE, 1)


def test_natural_sum_examples():
    assert ordinals.nat_sum(OMEGA, ONE).to_sexpr() == '(+ w 1)'
    assert ordinals.nat_sum(ONE, OMEGA).to_sexpr() == '(+ w 1)'
    assert ordinals.nat_sum(plus(OMEGA, ONE), OMEGA).to_sexpr() == '(+ w w 1)'
    assert ordinals.nat_sum(finite(2), finite(3)) == finite(5)


def test_natural_product_examples():
    assert ordinals.nat_prod(OMEGA, OMEGA).to_sexpr() == '(phi 0 2)'
    assert ordinals.nat_prod(plus(OMEGA, ONE), finite(2)).to_sexpr() == '(+ w w 1 1)'
    assert ordinals.nat_prod(finite(2), finite(3)) == finite(6)
    assert ordinals.nat_prod(EPSILON_0, ZERO) == ZERO
    assert ordinals.nat_prod(EPSILON_0, ONE) == EPSILON_0


@pytest.mark.parametrize('term, kind', [
    (ZERO, ordinals.ZERO_KIND),
    (finite(3), ordinals.SUCCESSOR_KIND),
    (OMEGA, ordinals.LIMIT_KIND),
    (plus(OMEGA, ONE), ordinals.SUCCESSOR_KIND),
    (EPSILON_0, ordinals.LIMIT_KIND),
])
def test_classify(term, kind):
    assert ordinals.classify_limit(term) == kind


@pytest.mark.parametrize('kind, n, expected', [
    ('fusible', 2, '(phi 1 0)'),
    ('fusible', 3, '(phi 2 0)'),
    ('fusible-le', 4, '(phi 3 0)'),
    ('closure', 3, '(phi 2 0)'),
    ('linear-upper', 2, '(phi 1 0)'),
    ('continuous', 3, '(phi 1 0 0 0)'),
])
def test_expected_order_type(kind, n, expected):
    assert ordinals.expected_order_type(kind, n).to_sexpr() == expected


def test_expected_order_type_errors():
    with pytest.raises(erring.PreconditionError):
        ordinals.expected_order_type('fusible', 1)
    with pytest.raises(erring.PreconditionError):
        ordinals.expected_order_type('continuous', 2)
    with pytest.raises(erring.DomainError):
        ordinals.expected_order_type('bogus', 3)
    with pytest.raises(TypeError):
        ordinals.expected_order_type('fusible', True)


def test_enumerate_terms():
    assert [t.to_sexpr() for t in ordinals.enumerate_terms(2)] == ['0', '1', '2', 'w', '(phi 1 0)']
    assert ordinals.enumerate_terms(0) == [ZERO]
    with pytest.raises(ValueError):
        ordinals.enumerate_terms(-1)
    with pytest.raises(ValueError):
        ordinals.enumerate_terms(2, max_arity=1)


def test_enumerate_terms_sorted_and_normal():
    for t in TERMS:
        assert ordinals.is_normal_form(t)
    for a, b in zip(TERMS, TERMS[1:]):
        assert ordinals.compare(a, b) == -1
    ternary = ordinals.enumerate_terms(3, max_arity=3)
    assert GAMMA_0 in ternary
    assert set(TERMS) < set(ternary)


def test_compare_is_a_strict_total_order_on_ternary_terms():
    assert GAMMA_0 in TERNARY
    order = {(a, b): ordinals.compare(a, b) for a in TERNARY for b in TERNARY}
    for (a, b), ab in order.items():
        assert ab in (-1, 0, 1)
        assert (ab == 0) == (a == b)
        assert order[b, a] == -ab
    for a in TERNARY:
        assert not a < a
    for a in TERNARY:
        for b in TERNARY:
            if order[a, b] >= 0:
                continue
            for c in TERNARY:
                if order[b, c] < 0:
                    assert order[a, c] < 0, (a, b, c)


def test_enumeration_positions_match_compare():
    for i, a in enumerate(LARGER):
        for j, b in enumerate(LARGER):
            assert ordinals.compare(a, b) == (i > j) - (i < j)


@settings(max_examples=200, deadline=None)
@given(terms)
def test_normalize_idempotent(a):
    assert ordinals.normalize(a) == a
    assert ordinals.normalize(ordinals.normalize(a)) == a


@settings(max_examples=1000, deadline=None)
@given(larger_terms, larger_terms, larger_terms)
def test_total_order(a, b, c):
    ab = ordinals.compare(a, b)
    assert ab == -ordinals.compare(b, a)
    assert (ab == 0) == (a == b)
    if ab <= 0 and ordinals.compare(b, c) <= 0:
        assert ordinals.compare(a, c) <= 0


@settings(max_examples=500, deadline=None)
@given(larger_terms, larger_terms, larger_terms)
def test_natural_sum_laws(a, b, c):
    assert ordinals.nat_sum(a, b) == ordinals.nat_sum(b, a)
    assert ordinals.nat_sum(ordinals.nat_sum(a, b), c) == ordinals.nat_sum(a, ordinals.nat_sum(b, c))
    assert ordinals.nat_sum(a, ZERO) == a
    assert ordinals.is_normal_form(ordinals.nat_sum(a, b))
    if ordinals.compare(a, b) < 0:
        assert ordinals.compare(ordinals.nat_sum(a, c), ordinals.nat_sum(b, c)) < 0


@settings(max_examples=500, deadline=None)
@given(larger_terms, larger_terms, larger_terms)
def test_natural_product_laws(a, b, c):
    ab = ordinals.nat_prod(a, b)
    assert ab == ordinals.nat_prod(b, a)
    assert ordinals.is_normal_form(ab)
    assert ordinals.nat_prod(ab, c) == ordinals.nat_prod(a, ordinals.nat_prod(b, c))
    assert ordinals.nat_prod(a, ordinals.nat_sum(b, c)) == ordinals.nat_sum(ab, ordinals.nat_prod(a, c))
    assert ordinals.nat_prod(a, ONE) == a
    if not c.is_zero and ordinals.compare(a, b) < 0:
        assert ordinals.compare(ordinals.nat_prod(a, c), ordinals.nat_prod(b, c)) < 0
