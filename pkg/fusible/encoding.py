# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


# pylint: disable=C0301

from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import collections
import fractions
import json
from . import closure
from . import embedding
from . import exact
from . import generating
from . import mrecursion
from . import ordinals
from . import terms
from . import veblenstar




class FusibleEncoder(object):
    '''
    Encode results as JSON, or as a plain two-column table.

    Rationals are written "p/q", infinities "+inf" and "-inf", and terms as
    s-expressions.  Key order is fixed, so equal inputs give identical text.

    Keyword options:

    compact:    no indentation and no spaces after separators.
    witnesses:  include witness terms in generated fragments.
    '''
    __slots__ = ['compact', 'witnesses', '_encode_funcs']
    def __init__(self, *args, **kwargs):
        if args:
            raise TypeError('Explicit keyword arguments are required')
        compact = kwargs.pop('compact', False)
        witnesses = kwargs.pop('witnesses', True)
        if not all(x in (True, False) for x in (compact, witnesses)):
            raise TypeError('compact and witnesses must be booleans')
        if kwargs:
            raise TypeError('Unexpected keyword argument(s) {0}'.format(', '.join('"{0}"'.format(k) for k in kwargs)))
        self.compact = compact
        self.witnesses = witnesses

        self._encode_funcs = {type(None): self._encode_scalar,
                              type(True): self._encode_scalar,
                              type(1): self._encode_scalar,
                              type('a'): self._encode_scalar,
                              fractions.Fraction: exact.format_rational,
                              exact.ExtendedRational: str,
                              list: self._encode_list,
                              tuple: self._encode_list,
                              dict: self._encode_dict,
                              collections.OrderedDict: self._encode_dict,
                              ordinals.OrdinalTerm: self._encode_sexpr,
                              ordinals.VeblenTerm: self._encode_sexpr,
                              veblenstar.StarTerm: self._encode_sexpr,
                              terms.ConstantTerm: self._encode_sexpr,
                              terms.ApplicationTerm: self._encode_sexpr,
                              mrecursion.MTrace: self._encode_m_trace,
                              mrecursion.LevelData: self._encode_level_data,
                              mrecursion.InvariantReport: self._encode_invariant_report,
                              generating.Fragment: self._encode_fragment,
                              closure.ClosureSystem: self._encode_closure_system,
                              embedding.Embedding: self._encode_embedding,
                              embedding.EmbeddingReport: self._encode_embedding_report,
                              embedding.DemoReport: self._encode_demo_report}


    def payload(self, obj):
        '''
        JSON-compatible form of `obj`.
        '''
        try:
            func = self._encode_funcs[type(obj)]
        except KeyError:
            raise TypeError('Cannot encode object of type {0}'.format(type(obj).__name__))
        return func(obj)

    def encode(self, obj):
        if self.compact:
            return json.dumps(self.payload(obj), separators=(',', ':'), ensure_ascii=False)
        return json.dumps(self.payload(obj), indent=2, separators=(',', ': '), ensure_ascii=False) + '\n'

    def encode_table(self, obj):
        '''
        One "key<TAB>value" line per top-level entry of a mapping; nested
        values are written as compact JSON.  A list gives one line per item.
        '''
        data = self.payload(obj)
        if isinstance(data, dict):
            rows = data.items()
        elif isinstance(data, list):
            rows = enumerate(data)
        else:
            rows = [('value', data)]
        lines = []
        for k, v in rows:
            if not isinstance(v, str):
                v = json.dumps(v, separators=(',', ':'), ensure_ascii=False)
            lines.append('{0}\t{1}'.format(k, v))
        return '\n'.join(lines) + '\n'


    @staticmethod
    def _encode_scalar(obj):
        return obj

    @staticmethod
    def _encode_sexpr(obj):
        return obj.to_sexpr()

    def _encode_list(self, obj):
        return [self.payload(x) for x in obj]

    def _encode_dict(self, obj):
        out = collections.OrderedDict()
        for k, v in obj.items():
            out[k if isinstance(k, str) else self._encode_key(k)] = self.payload(v)
        return out

    def _encode_key(self, k):
        key = self.payload(k)
        if not isinstance(key, str):
            key = json.dumps(key, separators=(',', ':'))
        return key

    def _encode_m_trace(self, obj):
        out = collections.OrderedDict()
        out['n'] = obj.n
        out['x'] = exact.format_rational(obj.x)
        out['t'] = [exact.format_rational(t) for t in obj.t]
        out['M'] = exact.format_rational(obj.output)
        out['point'] = exact.format_rational(obj.point)
        return out

    def _encode_level_data(self, obj):
        out = collections.OrderedDict()
        out['x'] = exact.format_rational(obj.x)
        out['i'] = obj.i
        out['upper'] = str(obj.upper)
        out['low'] = str(obj.low)
        out['high'] = str(obj.high)
        return out

    def _encode_invariant_report(self, obj):
        out = collections.OrderedDict()
        out['n'] = obj.n
        out['ok'] = obj.ok
        out['checked'] = collections.OrderedDict(obj.checked)
        out['violations'] = [self.payload(v) for v in obj.violations]
        return out

    def _encode_fragment(self, obj):
        out = collections.OrderedDict()
        out['system'] = obj.system.name
        out['budget'] = obj.budget
        out['ceiling'] = None if obj.ceiling is None else exact.format_rational(obj.ceiling)
        out['count'] = len(obj)
        out['truncated'] = obj.truncated
        out['level_sizes'] = list(obj.level_sizes)
        out['values'] = [exact.format_rational(v) for v in obj.values]
        if self.witnesses:
            out['witnesses'] = [t.to_sexpr() for t in obj.witnesses]
        return out

    def _encode_closure_system(self, obj):
        out = collections.OrderedDict()
        out['base'] = self._encode_function(obj.base)
        out['constants'] = [exact.format_rational(p) for p in obj.constants]
        out['anchor'] = exact.format_rational(obj.anchor)
        out['derived'] = [self._encode_function(f) for f in obj.derived]
        out['generating'] = [f.name for f in obj.generating_functions()]
        return out

    @staticmethod
    def _encode_function(f):
        out = collections.OrderedDict()
        out['name'] = f.name
        out['arity'] = f.arity
        out['coefficients'] = [exact.format_rational(a) for a in f.coefficients]
        out['constant'] = exact.format_rational(f.constant)
        return out

    def _encode_embedding(self, obj):
        out = collections.OrderedDict()
        out['n'] = obj.n
        out['terms'] = [t.to_sexpr() for t in obj.terms]
        out['images'] = [exact.format_rational(e) for e in obj.images]
        return out

    def _encode_embedding_report(self, obj):
        out = collections.OrderedDict()
        out['terms'] = obj.terms
        out['ok'] = bool(obj.ok)
        out['order_preserving'] = obj.order_preserving
        out['order_violations'] = [list(v) for v in obj.order_violations]
        out['gap_violations'] = [list(v) for v in obj.gap_violations]
        out['isolation_violations'] = list(obj.isolation_violations)
        return out

    def _encode_demo_report(self, obj):
        return obj.as_dict()
