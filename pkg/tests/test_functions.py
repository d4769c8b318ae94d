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

from fusible import erring
from fusible import exact
from fusible import functions
from fusible import terms
from fusible.functions import LinearFunction, GeneratorSystem


HALF = Fraction(1, 2)


def test_g_n():
    g3 = functions.g_n(3)
    assert g3.coefficients == (Fraction(1, 3),)*3
    assert g3.constant == Fraction(1, 3)
    assert g3(0, 0, 0) == Fraction(1, 3)
    assert g3.is_symmetric()


def test_linear_function_validation():
    with pytest.raises(ValueError):
        LinearFunction([1, -1], 0)
    with pytest.raises(erring.ArityError):
        LinearFunction([], 0)
    with pytest.raises(ValueError):
        LinearFunction([1], 0, name='bad name')
    with pytest.raises(erring.ArityError):
        functions.g_n(2)(1)


def test_interchangeable_groups():
    f = LinearFunction([HALF, 1, HALF], 0)
    assert f.interchangeable == ((0, 2), (1,))
    assert not f.is_symmetric()


def test_evaluate_extended():
    g2 = functions.g_n(2)
    assert g2.evaluate_extended([exact.MINUS_INFINITY, 0]) == exact.MINUS_INFINITY
    assert g2.evaluate_extended([exact.PLUS_INFINITY, 1]) == exact.PLUS_INFINITY
    assert g2.evaluate_extended([HALF, HALF]) == 1
    zero_slot = LinearFunction([0, 1], 0)
    assert zero_slot.evaluate_extended([exact.PLUS_INFINITY, 2]) == 2


def test_collapse():
    f = LinearFunction([HALF, 0, HALF], 1, name='h')
    c = f.collapse()
    assert c.arity == 2
    assert c.coefficients == (HALF, HALF)
    assert c.name == 'h'
    g2 = functions.g_n(2)
    assert g2.collapse() is g2
    with pytest.raises(erring.ArityError):
        LinearFunction([0, 0], 1).collapse()


def test_key_ignores_argument_order():
    assert LinearFunction([1, HALF], 1).key() == LinearFunction([HALF, 1], 1, name='other').key()


def test_generator_system_validation():
    g = functions.g_n(2)
    with pytest.raises(ValueError):
        GeneratorSystem([g], [])
    with pytest.raises(ValueError):
        GeneratorSystem([g], [0, 0])
    with pytest.raises(ValueError):
        GeneratorSystem([g, g], [0])
    with pytest.raises(ValueError):
        GeneratorSystem([], [0])
    system = GeneratorSystem([g], [1, 0])
    assert system.constants == (0, 1)
    assert system.min_constant == 0


def test_named_systems():
    f3 = functions.named_system('f3')
    assert f3.name == 'f3'
    assert len(f3.functions) == 1
    le3 = functions.named_system('f-le-3')
    assert [f.arity for f in le3.functions] == [1, 2, 3]
    assert le3.function('g1')(0) == 1
    for name in ('g3', 'f0', 'f-le-', 'F2'):
        with pytest.raises(erring.DomainError):
            functions.named_system(name)




def _app(g, *children):
    return terms.ApplicationTerm(g, children)


def test_eval_term():
    g2 = functions.g_n(2)
    zero = terms.ConstantTerm(0)
    half = _app(g2, zero, zero)
    assert terms.eval_term(half) == HALF
    assert terms.eval_term(zero) == 0
    t = _app(g2, zero, half)
    assert terms.eval_term(t) == Fraction(3, 4)
    assert t.to_sexpr() == '(g 0 (g 0 0))'
    assert t.applications == 2
    assert terms.term_depth(t) == 2


def test_shared_subterms_count_as_tree():
    g2 = functions.g_n(2)
    zero = terms.ConstantTerm(0)
    half = _app(g2, zero, zero)
    one = _app(g2, half, half)
    assert one.value == 1
    assert one.applications == 3
    assert one.to_sexpr() == '(g (g 0 0) (g 0 0))'


def test_monotonicity_checked_at_construction():
    flat = LinearFunction([HALF, HALF], 0, name='f')
    zero = terms.ConstantTerm(0)
    with pytest.raises(erring.MonotonicityError):
        terms.ApplicationTerm(flat, [zero, zero])


def test_eval_term_reports_node_path():
    g2 = functions.g_n(2)
    zero = terms.ConstantTerm(0)
    one = terms.ConstantTerm(1)
    # g2(0, 1) = 1 does not exceed its second argument.
    bad = terms.ApplicationTerm(g2, [zero, one], check=False)
    root = _app(functions.g_n(2), zero, terms.ConstantTerm(Fraction(1, 4)))
    with pytest.raises(erring.MonotonicityError) as e:
        terms.eval_term(bad)
    assert e.value.path == [1]
    assert terms.eval_term(root) == Fraction(5, 8)


def test_arity_checked():
    with pytest.raises(erring.ArityError):
        terms.ApplicationTerm(functions.g_n(2), [terms.ConstantTerm(0)])
