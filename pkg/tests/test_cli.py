# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import io
import json

import pytest

from fusible import cli


def run(*argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    status = cli.main(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def run_json(*argv):
    status, out, err = run(*argv)
    assert status == cli.EXIT_OK, err
    return json.loads(out)


def test_m():
    out = run_json('m', '--n', '2', '--x', '1/1')
    assert out == {'n': 2, 'x': '1/1', 't': ['1/1', '1/2', '1/4'], 'M': '1/8', 'point': '9/8'}


def test_m_negative_and_witness():
    assert run_json('m', '--n', '3', '--x=-1/2')['M'] == '1/2'
    out = run_json('m', '--n', '2', '--x', '0', '--witness')
    assert out['M'] == '1/2'
    assert out['witness'] == '(g 0 0)'


def test_generate():
    out = run_json('generate', '--system', 'f2', '--budget', '3')
    assert out['values'] == ['0/1', '1/2', '3/4', '7/8', '1/1']
    assert out['level_sizes'] == [1, 1, 1, 2]
    out = run_json('generate', '--system', 'f3', '--budget', '2')
    assert out['values'] == ['0/1', '1/3', '4/9']


def test_successor_verbs():
    out = run_json('succ', '--system', 'f2', '--r', '1')
    assert out['system'] == 'f2'
    assert out['r'] == '1/1'
    assert out['succ'] == '9/8'
    assert out['stats']['calls']['succ'] >= 1
    assert run_json('succ', '--system', 'f2', '--r=-inf')['succ'] == '0/1'
    assert run_json('pred', '--system', 'f2', '--r', '3/4')['pred'] == '1/2'
    assert run_json('weakpred', '--system', 'f2', '--r', '3/5')['weak_pred'] == '1/2'
    assert run_json('member', '--system', 'f3', '--r', '1/2')['in_closure'] is True
    assert run_json('member', '--system', 'f2', '--r', '5/8')['in_closure'] is False


def test_closure_build():
    out = run_json('closure-build', '--system', 'f3')
    assert [f['name'] for f in out['derived']] == ['g{1}', 'g{2}', 'g{3}', 'g{1,2}', 'g{1,3}', 'g{2,3}']


@pytest.mark.parametrize('argv, key, expected', [
    (('cmp', '(phi 0 1)', '(phi 1 0)'), 'order', 'less'),
    (('cmp', 'w', 'w'), 'order', 'equal'),
    (('sum', '(+ w 1)', 'w'), 'result', '(+ w w 1)'),
    (('prod', 'w', 'w'), 'result', '(phi 0 2)'),
    (('classify', '(+ w 1)'), 'kind', 'successor'),
    (('normalize', '(+ 1 w)'), 'result', 'w'),
    (('type', '--kind', 'continuous', '--n', '3'), 'order_type', '(phi 1 0 0 0)'),
])
def test_ord(argv, key, expected):
    assert run_json('ord', *argv)[key] == expected


def test_ord_enum():
    out = run_json('ord', 'enum', '--size-bound', '2')
    assert out == {'count': 5, 'terms': ['0', '1', '2', 'w', '(phi 1 0)']}


def test_star_enum():
    out = run_json('star-enum', '--size-bound', '2')
    assert out['count'] == 5
    assert out['terms'][:2] == ['0', '(V 0 0 0)']
    assert out['terms'][2] == '(V 0 0 (V 0 0 0))'


def test_embed_and_demo():
    out = run_json('embed', '--terms', '5')
    assert out['embedding']['images'] == ['0/1', '2/1', '8/3', '22/9', '64/27']
    assert out['report']['ok'] is True
    out = run_json('demo', '--terms', '20', '--budget', '2')
    assert out['generated'] == 5
    assert out['missing'] == []
    assert out['first_above_zero'] == '2/1'


def test_check_invariants():
    out = run_json('check-invariants', '--n', '2', '--step', '1/4')
    assert out['ok'] is True
    assert out['violations'] == []


def test_table_and_compact_output():
    status, out, _ = run('--table', 'ord', 'classify', 'w')
    assert status == cli.EXIT_OK
    assert out == 'kind\tlimit\n'
    status, out, _ = run('--compact', 'ord', 'cmp', '1', 'w')
    assert out == '{"order":"less"}\n'


def test_output_is_reproducible():
    argv = ('succ', '--system', 'f3', '--r', '1/2')
    first = run(*argv)
    second = run(*argv)
    assert first == second
    assert json.loads(first[1])['succ'] == '5/9'


@pytest.mark.parametrize('argv', [
    ('m', '--n', '2', '--x', 'half'),
    ('m', '--n', '2', '--x', '1/0'),
    ('frobnicate',),
    (),
    ('ord', 'cmp', '(phi 0', 'w'),
    ('generate', '--system', 'f2', '--budget', '-1'),
    ('m', '--n', '1', '--x', '0'),
    ('check-invariants', '--n', '2', '--step', '0'),
    ('ord', 'enum', '--size-bound', '2', '--max-arity', '1'),
])
def test_usage_errors(argv):
    status, out, err = run(*argv)
    assert status == cli.EXIT_USAGE
    assert out == ''
    assert err


def test_malformed_term_shows_caret():
    status, _, err = run('ord', 'cmp', '(phi 0 1))', 'w')
    assert status == cli.EXIT_USAGE
    assert '^' in err


@pytest.mark.parametrize('argv', [
    ('succ', '--system', 'f-le-2', '--r', '0'),
    ('generate', '--system', 'bogus', '--budget', '2'),
    ('ord', 'cmp', '(+ 1 w)', 'w'),
    ('pred', '--system', 'f2', '--r', '5/8'),
    ('demo', '--n', '2'),
])
def test_domain_errors(argv):
    status, out, err = run(*argv)
    assert status == cli.EXIT_DOMAIN
    assert out == ''
    assert err.startswith('fusible: ')


def test_resource_limits(monkeypatch):
    status, out, _ = run('succ', '--system', 'f2', '--r', '1', '--work-budget', '1')
    assert status == cli.EXIT_RESOURCE
    assert out == ''
    status, _, _ = run('pred', '--system', 'f2', '--r', '1', '--scan-cap', '25')
    assert status == cli.EXIT_RESOURCE
    monkeypatch.setenv('FUSIBLE_WORK_BUDGET', '1')
    status, _, _ = run('m', '--n', '3', '--x', '1')
    assert status == cli.EXIT_RESOURCE


def test_internal_value_errors_are_not_usage_errors(monkeypatch):
    def broken(a, b):
        raise ValueError('broken comparison')
    monkeypatch.setattr(cli.ordinals, 'compare', broken)
    with pytest.raises(ValueError):
        run('ord', 'cmp', '1', 'w')
