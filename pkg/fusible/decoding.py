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


import re
from . import erring
from . import exact
from . import grammar
from . import ordinals
from . import veblenstar


_LIT = grammar.LIT_GRAMMAR




class SourceNode(object):
    '''
    Node of a parsed s-expression:  an atom with its text, or a list with
    its children.  `offset` is the column of the first character.
    '''
    __slots__ = ['offset', 'text', 'children']
    def __init__(self, offset, text=None, children=None):
        self.offset = offset
        self.text = text
        self.children = children

    @property
    def is_atom(self):
        return self.children is None

    def head(self):
        if self.is_atom or not self.children or not self.children[0].is_atom:
            return None
        return self.children[0].text




class TermDecoder(object):
    '''
    Decode the text forms of rationals, ordinal terms, and V-terms.

    Keyword options:

    max_depth:  maximum s-expression nesting; defaults to
                `grammar.PARAMS['max_term_depth']`.
    '''
    __slots__ = ['max_depth', '_token_re', '_rational_re', '_integer_re']
    def __init__(self, *args, **kwargs):
        if args:
            raise TypeError('Explicit keyword arguments are required')
        max_depth = kwargs.pop('max_depth', grammar.PARAMS['max_term_depth'])
        if not isinstance(max_depth, int) or isinstance(max_depth, bool):
            raise TypeError('max_depth must be an integer')
        if max_depth < 1:
            raise erring.OptionRangeError('max_depth must be >= 1')
        if kwargs:
            raise TypeError('Unexpected keyword argument(s) {0}'.format(', '.join('"{0}"'.format(k) for k in kwargs)))
        self.max_depth = max_depth
        self._token_re = re.compile(r'\{0}|\{1}|{2}'.format(_LIT['open_term'], _LIT['close_term'], grammar.RE_GRAMMAR['term_token']))
        self._rational_re = re.compile(grammar.RE_GRAMMAR['rational'])
        self._integer_re = re.compile(grammar.RE_GRAMMAR['positive_dec_integer'])


    def decode(self, s, kind='ordinal', **kwargs):
        if kind == 'rational':
            return self.decode_rational(s)
        if kind == 'extended_rational':
            return self.decode_extended_rational(s)
        if kind == 'ordinal':
            return self.decode_ordinal(s, **kwargs)
        if kind == 'star':
            return self.decode_star(s, **kwargs)
        raise ValueError('Unknown kind "{0}"'.format(kind))

    @staticmethod
    def _as_text(s):
        if isinstance(s, bytes):
            try:
                return s.decode('utf8')
            except UnicodeDecodeError:
                raise erring.DecodingError('Input is not valid UTF-8', repr(s))
        if not isinstance(s, str):
            raise TypeError('Expected a string')
        return s

    def decode_rational(self, s):
        return exact.parse_rational(self._as_text(s))

    def decode_extended_rational(self, s):
        return exact.parse_extended_rational(self._as_text(s))

    def read(self, s):
        '''
        Parse one s-expression into a tree of `SourceNode`.
        '''
        s = self._as_text(s)
        stack = [[]]
        opens = []
        for m in self._token_re.finditer(s):
            token = m.group()
            if token == _LIT['open_term']:
                if len(opens) >= self.max_depth:
                    raise erring.DecodingError('Nesting depth exceeds max_depth = {0}'.format(self.max_depth), s, m.start())
                opens.append(m.start())
                stack.append([])
            elif token == _LIT['close_term']:
                if not opens:
                    raise erring.DecodingError('Unbalanced "{0}"'.format(token), s, m.start())
                children = stack.pop()
                stack[-1].append(SourceNode(opens.pop(), children=children))
            else:
                stack[-1].append(SourceNode(m.start(), text=token))
        if opens:
            raise erring.DecodingError('Unclosed "{0}"'.format(_LIT['open_term']), s, opens[-1])
        top = stack[0]
        if not top:
            raise erring.DecodingError('Empty input', s, len(s))
        if len(top) > 1:
            raise erring.DecodingError('Trailing content after a complete term', s, top[1].offset)
        return top[0]


    def decode_ordinal(self, s, normalize=False):
        '''
        Ordinal term from "0", a natural number, "w", "(phi a_1 ... a_m)", or
        "(+ p_1 ... p_k)".  With `normalize`, the normal form is returned.
        '''
        s = self._as_text(s)
        term = self._ordinal(self.read(s), s)
        if normalize:
            return ordinals.normalize(term)
        return term

    def _ordinal(self, node, source):
        if node.is_atom:
            if node.text == _LIT['omega']:
                return ordinals.OMEGA
            if self._integer_re.fullmatch(node.text):
                return ordinals.finite(int(node.text))
            raise erring.DecodingError('Invalid ordinal atom "{0}"'.format(node.text), source, node.offset)
        head = node.head()
        args = [self._ordinal(child, source) for child in node.children[1:]]
        if head == _LIT['veblen']:
            if len(args) < 2:
                raise erring.DecodingError('"{0}" takes at least 2 arguments'.format(head), source, node.offset)
            return ordinals.phi(*args)
        if head == _LIT['ordinal_sum']:
            return ordinals.OrdinalTerm(p for a in args for p in a.summands)
        raise erring.DecodingError('Expected "({0} ...)" or "({1} ...)"'.format(_LIT['veblen'], _LIT['ordinal_sum']), source, node.offset)


    def decode_star(self, s, n=None):
        '''
        V-term from "0" or "(V t_1 ... t_n)".  When n is given, every
        application must have n arguments.
        '''
        s = self._as_text(s)
        term = self._star(self.read(s), s, n)
        return term

    def _star(self, node, source, n):
        if node.is_atom:
            if node.text == _LIT['star_zero']:
                return veblenstar.STAR_ZERO
            raise erring.DecodingError('Invalid V-term atom "{0}"'.format(node.text), source, node.offset)
        if node.head() != _LIT['star_constructor']:
            raise erring.DecodingError('Expected "({0} ...)"'.format(_LIT['star_constructor']), source, node.offset)
        args = [self._star(child, source, n) for child in node.children[1:]]
        if n is not None and len(args) != n:
            raise erring.DecodingError('"{0}" takes {1} arguments here, got {2}'.format(_LIT['star_constructor'], n, len(args)), source, node.offset)
        try:
            return veblenstar.StarTerm(args)
        except erring.ArityError as e:
            raise erring.DecodingError(str(e), source, node.offset)
