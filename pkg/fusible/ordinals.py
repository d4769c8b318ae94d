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
Ordinal terms below the small Veblen ordinal.

An `OrdinalTerm` is a sum of principal terms; the empty sum is 0.  A
principal term is a finitary Veblen application phi(a_1, ..., a_m) with
`OrdinalTerm` arguments, m >= 2.  Leading zero arguments do not change the
value and are stripped at construction, down to two arguments, so
phi(0, g) = w^g, phi(1, 0) = epsilon_0, phi(1, 0, 0) = Gamma_0.

A term is in normal form when its summands are nonincreasing, its
arguments are in normal form, and no application equals its last nonzero
argument.  Normal forms are unique, so syntactic equality of normal forms
is equality of ordinals.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import collections
import functools
import itertools
from . import erring
from . import grammar
from . import tooling


_LIT = grammar.LIT_GRAMMAR




class VeblenTerm(object):
    '''
    Principal term phi(args).
    '''
    __slots__ = ['args', '_hash']
    def __init__(self, args):
        args = tuple(args)
        if len(args) < 2:
            raise erring.ArityError('phi takes at least 2 arguments, got {0}'.format(len(args)))
        if not all(isinstance(a, OrdinalTerm) for a in args):
            raise TypeError('phi arguments must be OrdinalTerm instances')
        while len(args) > 2 and args[0].is_zero:
            args = args[1:]
        self.args = args
        self._hash = hash(('phi',) + args)

    @property
    def arity(self):
        return len(self.args)

    @property
    def size(self):
        return 1 + sum(a.size for a in self.args)

    def padded(self, length):
        return (ZERO,)*(length - len(self.args)) + self.args

    def __eq__(self, other):
        if not isinstance(other, VeblenTerm):
            return NotImplemented
        return self._hash == other._hash and self.args == other.args

    def __ne__(self, other):
        if not isinstance(other, VeblenTerm):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return self._hash

    def to_sexpr(self):
        if self.arity == 2 and self.args[0].is_zero:
            if self.args[1].is_zero:
                return '1'
            if self.args[1] == ONE:
                return _LIT['omega']
        return '{0}{1} {2}{3}'.format(_LIT['open_term'], _LIT['veblen'],
                                      ' '.join(a.to_sexpr() for a in self.args),
                                      _LIT['close_term'])

    def __str__(self):
        return self.to_sexpr()

    def __repr__(self):
        return 'VeblenTerm({0})'.format(self.to_sexpr())




class OrdinalTerm(object):
    '''
    Sum of principal terms, in the given order.
    '''
    __slots__ = ['summands', '_hash']
    def __init__(self, summands=()):
        summands = tuple(summands)
        if not all(isinstance(p, VeblenTerm) for p in summands):
            raise TypeError('Summands must be VeblenTerm instances')
        self.summands = summands
        self._hash = hash(summands)

    @property
    def is_zero(self):
        return not self.summands

    @property
    def size(self):
        return sum(p.size for p in self.summands)

    def is_principal(self):
        return len(self.summands) == 1

    def __eq__(self, other):
        if not isinstance(other, OrdinalTerm):
            return NotImplemented
        return self._hash == other._hash and self.summands == other.summands

    def __ne__(self, other):
        if not isinstance(other, OrdinalTerm):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def to_sexpr(self):
        if not self.summands:
            return _LIT['ordinal_zero']
        if all(p == _ONE_PRINCIPAL for p in self.summands):
            return str(len(self.summands))
        if len(self.summands) == 1:
            return self.summands[0].to_sexpr()
        return '{0}{1} {2}{3}'.format(_LIT['open_term'], _LIT['ordinal_sum'],
                                      ' '.join(p.to_sexpr() for p in self.summands),
                                      _LIT['close_term'])

    def __str__(self):
        return self.to_sexpr()

    def __repr__(self):
        return 'OrdinalTerm({0})'.format(self.to_sexpr())


ZERO = OrdinalTerm()
_ONE_PRINCIPAL = VeblenTerm((ZERO, ZERO))
ONE = OrdinalTerm((_ONE_PRINCIPAL,))
OMEGA = OrdinalTerm((VeblenTerm((ZERO, ONE)),))


def phi(*args):
    '''
    The principal term phi(args) as a one-summand OrdinalTerm.  The result
    is not normalized.
    '''
    return OrdinalTerm((VeblenTerm(args),))


def finite(k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError('k must be an integer')
    if k < 0:
        raise erring.DomainError('Finite ordinals are nonnegative, got {0}'.format(k))
    return OrdinalTerm((_ONE_PRINCIPAL,)*k)


def omega_power(x):
    '''
    w^x in normal form.
    '''
    return normalize(phi(ZERO, x))




def _is_absorbed(p):
    '''
    Whether phi(args) equals its last nonzero argument b.  With both argument
    lists padded to a common length, this holds when b is principal with
    arguments c, every argument after b is zero, and for some earlier
    position i the arguments before i agree with c, a_i < c_i, and the
    arguments strictly between i and b are below b.
    '''
    args = p.args
    nonzero = [k for k, a in enumerate(args) if not a.is_zero]
    if not nonzero:
        return False
    b = args[nonzero[-1]]
    if not b.is_principal():
        return False
    inner = b.summands[0]
    length = max(len(args), inner.arity)
    a = p.padded(length)
    c = inner.padded(length)
    k = nonzero[-1] + length - len(args)
    for i in range(k):
        if a[:i] != c[:i]:
            break
        if _cmp(a[i], c[i]) < 0 and all(_cmp(a[j], b) < 0 for j in range(i + 1, k)):
            return True
    return False


@functools.lru_cache(maxsize=None)
def is_normal_form(t):
    if not isinstance(t, OrdinalTerm):
        raise TypeError('Expected an OrdinalTerm')
    for p in t.summands:
        if not all(is_normal_form(a) for a in p.args):
            return False
        if _is_absorbed(p):
            return False
    return all(_cmp_principal(p, q) >= 0 for p, q in zip(t.summands, t.summands[1:]))


def _require_normal_form(t, operation):
    if not isinstance(t, OrdinalTerm):
        raise TypeError('{0} needs OrdinalTerm arguments'.format(operation))
    if not is_normal_form(t):
        raise erring.NormalFormError(t, 'argument of {0} is not in normal form'.format(operation))


@functools.lru_cache(maxsize=None)
def normalize(t):
    '''
    Normal form of t:  arguments normalized, applications that equal their
    last nonzero argument replaced by it, and summands absorbed by a larger
    later summand dropped.
    '''
    if not isinstance(t, OrdinalTerm):
        raise TypeError('Expected an OrdinalTerm')
    summands = []
    for p in t.summands:
        q = VeblenTerm([normalize(a) for a in p.args])
        if _is_absorbed(q):
            pieces = [a for a in q.args if not a.is_zero][-1].summands
        else:
            pieces = (q,)
        for piece in pieces:
            while summands and _cmp_principal(summands[-1], piece) < 0:
                summands.pop()
            summands.append(piece)
    return OrdinalTerm(summands)




def _principal_less(p, q):
    '''
    phi(a) < phi(b) for normal-form principal terms:  either phi(a) <= b_i
    for some i, or at the first position i where the padded argument lists
    differ a_i < b_i and every later a_j is below phi(b).
    '''
    p_term = OrdinalTerm((p,))
    q_term = OrdinalTerm((q,))
    if any(_cmp(p_term, b) <= 0 for b in q.args):
        return True
    length = max(p.arity, q.arity)
    a = p.padded(length)
    b = q.padded(length)
    for i in range(length):
        if a[i] != b[i]:
            return _cmp(a[i], b[i]) < 0 and all(_cmp(a_j, q_term) < 0 for a_j in a[i+1:])
    return False


@functools.lru_cache(maxsize=None)
def _cmp_principal(p, q):
    if p == q:
        return 0
    return -1 if _principal_less(p, q) else 1


@functools.lru_cache(maxsize=None)
def _cmp(s, t):
    for p, q in zip(s.summands, t.summands):
        c = _cmp_principal(p, q)
        if c:
            return c
    return (len(s.summands) > len(t.summands)) - (len(s.summands) < len(t.summands))


def compare(a, b):
    '''
    -1, 0, or 1 as a is less than, equal to, or greater than b.  Both terms
    must be in normal form.
    '''
    _require_normal_form(a, 'compare')
    _require_normal_form(b, 'compare')
    return _cmp(a, b)




def nat_sum(a, b):
    '''
    Natural (Hessenberg) sum:  the summands of both terms, merged
    nonincreasingly.
    '''
    _require_normal_form(a, 'nat_sum')
    _require_normal_form(b, 'nat_sum')
    merged = sorted(a.summands + b.summands, key=functools.cmp_to_key(_cmp_principal), reverse=True)
    return OrdinalTerm(merged)


def log(p):
    '''
    Exponent x of a principal term w^x.  Principal terms other than
    phi(0, x) are epsilon numbers and are their own exponent.
    '''
    if p.arity == 2 and p.args[0].is_zero:
        return p.args[1]
    return OrdinalTerm((p,))


def nat_prod(a, b):
    '''
    Natural product:  the natural sum of w^(log a_i # log b_j) over all
    pairs of summands.
    '''
    _require_normal_form(a, 'nat_prod')
    _require_normal_form(b, 'nat_prod')
    pieces = []
    for p in a.summands:
        for q in b.summands:
            pieces.extend(omega_power(nat_sum(log(p), log(q))).summands)
    return OrdinalTerm(sorted(pieces, key=functools.cmp_to_key(_cmp_principal), reverse=True))


ZERO_KIND = 'zero'
SUCCESSOR_KIND = 'successor'
LIMIT_KIND = 'limit'

def classify_limit(a):
    _require_normal_form(a, 'classify_limit')
    if a.is_zero:
        return ZERO_KIND
    if a.summands[-1] == _ONE_PRINCIPAL:
        return SUCCESSOR_KIND
    return LIMIT_KIND




ORDER_TYPE_KINDS = ('fusible', 'fusible-le', 'closure', 'linear-upper', 'continuous')

def expected_order_type(kind, n):
    '''
    Order type of a family of sets indexed by n:

      * fusible, fusible-le, closure:  F_n, F_{<=n}, and the closure of F_n
        all have order type phi(n-1, 0).
      * linear-upper:  phi(n-1, 0) bounds the order type of F({g},P) for
        monotone linear g of arity n.
      * continuous:  phi(1, 0, ..., 0) with n zeros, reached by a
        continuous monotone g of arity n.
    '''
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError('n must be an integer')
    if kind not in ORDER_TYPE_KINDS:
        raise erring.DomainError('Unknown order type kind "{0}"; expected one of {1}'.format(kind, ', '.join(ORDER_TYPE_KINDS)))
    if kind == 'continuous':
        if n < 3:
            raise erring.PreconditionError('expected_order_type', 'kind "continuous" needs n >= 3, got {0}'.format(n))
        return phi(*([ONE] + [ZERO]*n))
    if n < 2:
        raise erring.PreconditionError('expected_order_type', 'n must be >= 2, got {0}'.format(n))
    return phi(finite(n - 1), ZERO)




def enumerate_terms(size_bound, max_arity=2):
    '''
    All normal-form terms with at most `size_bound` phi applications and
    Veblen arity at most `max_arity`, sorted increasingly.
    '''
    if not isinstance(size_bound, int) or isinstance(size_bound, bool) or size_bound < 0:
        raise erring.OptionRangeError('size_bound must be a nonnegative integer')
    if not isinstance(max_arity, int) or max_arity < 2:
        raise erring.OptionRangeError('max_arity must be an integer >= 2')
    by_size = collections.defaultdict(set)
    by_size[0].add(ZERO)
    principals = collections.defaultdict(set)
    for size in range(1, size_bound + 1):
        for arity in range(2, max_arity + 1):
            for split in tooling.compositions(size - 1, arity):
                for args in itertools.product(*[by_size[s] for s in split]):
                    if arity > 2 and args[0].is_zero:
                        continue
                    p = VeblenTerm(args)
                    if not _is_absorbed(p):
                        principals[size].add(p)
        for p in principals[size]:
            by_size[size].add(OrdinalTerm((p,)))
        for count in range(2, size + 1):
            for split in tooling.compositions(size, count):
                if 0 in split:
                    continue
                for summands in itertools.product(*[principals[s] for s in split]):
                    if all(_cmp_principal(p, q) >= 0 for p, q in zip(summands, summands[1:])):
                        by_size[size].add(OrdinalTerm(summands))
    out = set()
    for size in range(size_bound + 1):
        out.update(by_size[size])
    return sorted(out, key=functools.cmp_to_key(_cmp))

