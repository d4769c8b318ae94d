# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


# pylint: disable=C0301, C0330

from __future__ import (division, print_function, absolute_import,
                        unicode_literals)




# Non-textual general parameters.  Budgets count work units: cache misses
# for the recursive engines, plus scanned closure elements for the successor
# engine.
PARAMS = {'m_work_budget': 2000000,
          'successor_work_budget': 2000000,
          'pred_scan_cap': 200000,
          'generation_cap': 100000,
          'max_term_depth': 100}

# Environment variable overriding the default work budget of both engines
WORK_BUDGET_ENV_VAR = 'FUSIBLE_WORK_BUDGET'




# Literal grammar
_RAW_LIT_GRAMMAR = [# Whitespace
                    ('space', '\x20'),
                    ('tab', '\t'),
                    ('newline', '\n'),
                    ('whitespace', '\x20\t\n\r'),
                    # S-expressions
                    ('open_term', '('),
                    ('close_term', ')'),
                    # Numbers
                    ('rational_sep', '/'),
                    ('plus_infinity', '+inf'),
                    ('minus_infinity', '-inf'),
                    # Ordinal terms
                    ('ordinal_zero', '0'),
                    ('omega', 'w'),
                    ('veblen', 'phi'),
                    ('ordinal_sum', '+'),
                    # Star terms
                    ('star_zero', '0'),
                    ('star_constructor', 'V'),
                    # Monotone terms
                    ('default_function_name', 'g'),
                    ('closure_subset_open', '{'),
                    ('closure_subset_close', '}'),
                    ('closure_subset_sep', ',')]

LIT_GRAMMAR = dict(_RAW_LIT_GRAMMAR)
LIT_GRAMMAR['term_delims'] = LIT_GRAMMAR['open_term'] + LIT_GRAMMAR['close_term']




# Regular expressions, as strings.  Compiled where used.
_RAW_RE_GRAMMAR = [('dec_digits', '[0-9]+'),
                   ('positive_dec_integer', '(?:0|[1-9][0-9]*)'),
                   ('opt_sign', '[+\\-]?'),
                   ('integer', '{opt_sign}{positive_dec_integer}'),
                   ('rational', '(?P<numerator>{opt_sign}{positive_dec_integer})(?:/(?P<denominator>[1-9][0-9]*))?'),
                   ('extended_rational', '(?:(?P<infinity>[+\\-]inf)|{rational})'),
                   ('term_token', '[^\\s()]+')]


def _build_re_grammar(raw):
    grammar = {}
    for k, v in raw:
        grammar[k] = v.format(**grammar)
    return grammar

RE_GRAMMAR = _build_re_grammar(_RAW_RE_GRAMMAR)
