# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import pytest

from fusible import erring
from fusible import grammar
from fusible import tooling


def test_keydefaultdict_passes_key():
    d = tooling.keydefaultdict(lambda k: k * 2)
    assert d[21] == 42
    assert 21 in d


def test_shared_memo_keeps_first_value():
    memo = tooling.SharedMemo()
    memo['a'] = 1
    memo['a'] = 2
    assert memo['a'] == 1


def test_default_work_budget(monkeypatch):
    monkeypatch.delenv(grammar.WORK_BUDGET_ENV_VAR, raising=False)
    assert tooling.default_work_budget('m_work_budget') == grammar.PARAMS['m_work_budget']
    monkeypatch.setenv(grammar.WORK_BUDGET_ENV_VAR, '77')
    assert tooling.default_work_budget('m_work_budget') == 77


@pytest.mark.parametrize('raw', ['abc', '0', '-5'])
def test_invalid_work_budget_env(monkeypatch, raw):
    monkeypatch.setenv(grammar.WORK_BUDGET_ENV_VAR, raw)
    with pytest.raises(ValueError):
        tooling.default_work_budget('m_work_budget')


def test_check_budget():
    tooling.check_budget('cap', 0)
    tooling.check_budget('cap', None, allow_none=True)
    with pytest.raises(TypeError):
        tooling.check_budget('cap', 1.5)
    with pytest.raises(ValueError):
        tooling.check_budget('cap', -1)


def test_work_budget_charge():
    budget = tooling.WorkBudget('test', 2)
    budget.charge()
    budget.charge()
    with pytest.raises(erring.WorkBudgetExceeded):
        budget.charge()


def _fib_frame(k):
    if k < 2:
        return k
    a = yield k - 1
    b = yield k - 2
    return a + b


def test_trampoline_deep_recursion():
    memo = {}
    budget = tooling.WorkBudget('fib', 10**6)
    assert tooling.run_trampoline(5000, _fib_frame, memo, budget) > 0
    assert tooling.run_trampoline(30, _fib_frame, memo, budget) == 832040
    assert budget.used == 5001


def test_trampoline_reports_hits():
    hits = []
    memo = {}
    tooling.run_trampoline(10, _fib_frame, memo, tooling.WorkBudget('fib', 100), on_hit=hits.append)
    assert hits
    assert all(k in memo for k in hits)


def test_trampoline_detects_cycles():
    def frame(k):
        yield (k + 1) % 3
    with pytest.raises(erring.Bug):
        tooling.run_trampoline(0, frame, {}, tooling.WorkBudget('cycle', 100))


def test_compositions():
    assert list(tooling.compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(tooling.compositions(3, 3))) == 10
    assert list(tooling.compositions(0, 3)) == [(0, 0, 0)]
