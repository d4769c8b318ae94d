# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#

# pylint: disable=C0301

'''
Closed terms over the constant 0 and one n-ary constructor V, ordered as
the fixed-point-free Veblen function orders its values.

The order has no gaps:  the term right after t is V(0, ..., 0, t).
Term equality is syntactic.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import functools
import itertools
from . import erring
from . import grammar
from . import tooling


_LIT = grammar.LIT_GRAMMAR




class StarTerm(object):
    '''
    0 when `args` is empty, else V(args).  Every application inside one
    term has the same arity.
    '''
    __slots__ = ['args', 'arity', 'size', '_hash', '_sexpr']
    def __init__(self, args=()):
        args = tuple(args)
        if args:
            if len(args) < 3:
                raise erring.ArityError('V takes at least 3 arguments, got {0}'.format(len(args)))
            if not all(isinstance(a, StarTerm) for a in args):
                raise TypeError('V arguments must be StarTerm instances')
            for a in args:
                if a.arity is not None and a.arity != len(args):
                    raise erring.ArityError('Mixed V arities {0} and {1}'.format(len(args), a.arity))
            self.arity = len(args)
        else:
            self.arity = None
        self.args = args
        self.size = 1 + sum(a.size for a in args) if args else 0
        self._hash = hash(('V',) + args)
        self._sexpr = None

    @property
    def is_zero(self):
        return not self.args

    def __eq__(self, other):
        if not isinstance(other, StarTerm):
            return NotImplemented
        return self._hash == other._hash and self.args == other.args

    def __ne__(self, other):
        if not isinstance(other, StarTerm):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return self._hash

    def to_sexpr(self):
        if self._sexpr is None:
            if not self.args:
                self._sexpr = _LIT['star_zero']
            else:
                self._sexpr = '{0}{1} {2}{3}'.format(_LIT['open_term'], _LIT['star_constructor'],
                                                     ' '.join(a.to_sexpr() for a in self.args),
                                                     _LIT['close_term'])
        return self._sexpr

    def __str__(self):
        return self.to_sexpr()

    def __repr__(self):
        return 'StarTerm({0})'.format(self.to_sexpr())


STAR_ZERO = StarTerm()


def application(*args):
    return StarTerm(args)


def star_successor(t, n):
    '''
    V(0, ..., 0, t), the least term above t.
    '''
    return StarTerm((STAR_ZERO,)*(n - 1) + (t,))




@functools.lru_cache(maxsize=None)
def star_less(a, b):
    '''
    a < b.  0 is least; V(a) < V(b) when a <= b_i for some i, or when at the
    first position i where they differ a_i < b_i and every later a_j < V(b).
    '''
    if b.is_zero:
        return False
    if a.is_zero:
        return True
    if any(a == b_i or star_less(a, b_i) for b_i in b.args):
        return True
    for i, (a_i, b_i) in enumerate(zip(a.args, b.args)):
        if a_i != b_i:
            return star_less(a_i, b_i) and all(star_less(a_j, b) for a_j in a.args[i+1:])
    return False


def star_compare(a, b):
    '''
    -1, 0, or 1 as a is less than, equal to, or greater than b.
    '''
    if not isinstance(a, StarTerm) or not isinstance(b, StarTerm):
        raise TypeError('star_compare needs StarTerm arguments')
    if a.arity is not None and b.arity is not None and a.arity != b.arity:
        raise erring.ArityError('Cannot compare V terms of arity {0} and {1}'.format(a.arity, b.arity))
    if a == b:
        return 0
    return -1 if star_less(a, b) else 1


star_key = functools.cmp_to_key(star_compare)




def terms_by_size(n, size_bound):
    '''
    List whose entry s holds every term with exactly s applications, in
    s-expression order.
    '''
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise erring.OptionRangeError('n must be an integer >= 3')
    if not isinstance(size_bound, int) or isinstance(size_bound, bool) or size_bound < 0:
        raise erring.OptionRangeError('size_bound must be a nonnegative integer')
    levels = [[STAR_ZERO]]
    for size in range(1, size_bound + 1):
        level = []
        for split in tooling.compositions(size - 1, n):
            for args in itertools.product(*[levels[s] for s in split]):
                level.append(StarTerm(args))
        level.sort(key=lambda t: t.to_sexpr())
        levels.append(level)
    return levels


def star_enumerate(n, size_bound):
    '''
    All terms of arity n with at most `size_bound` applications, sorted by
    the term order.
    '''
    if not isinstance(size_bound, int) or isinstance(size_bound, bool) or size_bound < 1:
        raise erring.OptionRangeError('size_bound must be an integer >= 1')
    terms = [t for level in terms_by_size(n, size_bound) for t in level]
    return sorted(terms, key=star_key)


def successor_gaps(n, size_bound, search_bound):
    '''
    Pairs (t, u) with t of size <= size_bound and u of size <= search_bound
    such that t < u < V(0, ..., 0, t).  The list is empty when the successor
    law holds on this range.
    '''
    candidates = [t for level in terms_by_size(n, search_bound) for t in level]
    gaps = []
    for t in candidates:
        if t.size > size_bound:
            continue
        s = star_successor(t, n)
        for u in candidates:
            if star_less(t, u) and star_less(u, s):
                gaps.append((t, u))
    return gaps
