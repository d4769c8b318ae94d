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
Exact rational and extended-rational arithmetic.

Rationals are `fractions.Fraction` instances, which are always stored in
lowest terms with a positive denominator.  `ExtendedRational` adds the two
infinities, with arithmetic defined only for the combinations the successor
procedures need; everything else is an `ExtendedArithmeticError`.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import fractions
import re
from . import erring
from . import grammar


ExactRational = fractions.Fraction

_RATIONAL_RE = re.compile(grammar.RE_GRAMMAR['rational'])
_EXTENDED_RATIONAL_RE = re.compile(grammar.RE_GRAMMAR['extended_rational'])




def to_rational(x):
    '''
    Convert an int or Fraction to an exact rational.  Floats and bools are
    rejected, since they would silently introduce rounding or type confusion.
    '''
    if isinstance(x, fractions.Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        if isinstance(x, ExtendedRational) and x.is_finite:
            return x.value
        raise TypeError('Expected an int or Fraction, got {0!r}'.format(x))
    return fractions.Fraction(x)


def rat_add(a, b):
    return to_rational(a) + to_rational(b)

def rat_sub(a, b):
    return to_rational(a) - to_rational(b)

def rat_mul(a, b):
    return to_rational(a) * to_rational(b)

def rat_div(a, b):
    a = to_rational(a)
    b = to_rational(b)
    if b == 0:
        raise erring.DivisionByZeroError(a)
    return a / b


def format_rational(q):
    '''
    Canonical "p/q" form, always with a denominator.
    '''
    q = to_rational(q)
    return '{0}/{1}'.format(q.numerator, q.denominator)


def parse_rational(s):
    '''
    Parse "p/q", "p", "+p/q", or "-p/q".  The result is reduced.
    '''
    m = _RATIONAL_RE.fullmatch(s.strip())
    if m is None:
        raise erring.DecodingError('Invalid rational literal; expected "p/q" or an integer', s)
    denominator = m.group('denominator')
    return fractions.Fraction(int(m.group('numerator')), int(denominator) if denominator else 1)




class ExtendedRational(object):
    '''
    A rational, or one of the two infinities.

    Ordering is total:  -inf < every finite value < +inf.  A finite extended
    rational compares and hashes equal to the plain rational it wraps.
    '''
    __slots__ = ['tag', 'value']

    FINITE = 'finite'
    PLUS_INFINITY = 'plus-infinity'
    MINUS_INFINITY = 'minus-infinity'

    def __init__(self, value=None, tag='finite'):
        if tag == self.FINITE:
            value = to_rational(value)
        elif tag in (self.PLUS_INFINITY, self.MINUS_INFINITY):
            if value is not None:
                raise ValueError('Infinite extended rationals carry no value')
        else:
            raise ValueError('Unknown tag "{0}"'.format(tag))
        self.tag = tag
        self.value = value

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        return cls(x)

    @property
    def is_finite(self):
        return self.tag == self.FINITE

    def _rank(self):
        if self.tag == self.FINITE:
            return (0, self.value)
        if self.tag == self.PLUS_INFINITY:
            return (1, 0)
        return (-1, 0)

    def _other_rank(self, other):
        if isinstance(other, ExtendedRational):
            return other._rank()
        if isinstance(other, (int, fractions.Fraction)) and not isinstance(other, bool):
            return (0, fractions.Fraction(other))
        return None

    def __eq__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() == rank

    def __ne__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() != rank

    def __lt__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() < rank

    def __le__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() <= rank

    def __gt__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() > rank

    def __ge__(self, other):
        rank = self._other_rank(other)
        if rank is None:
            return NotImplemented
        return self._rank() >= rank

    def __hash__(self):
        if self.tag == self.FINITE:
            return hash(self.value)
        return hash(self.tag)

    def __neg__(self):
        if self.tag == self.FINITE:
            return ExtendedRational(-self.value)
        if self.tag == self.PLUS_INFINITY:
            return MINUS_INFINITY
        return PLUS_INFINITY

    def __add__(self, other):
        other = ExtendedRational.coerce(other)
        if self.is_finite and other.is_finite:
            return ExtendedRational(self.value + other.value)
        if self.is_finite:
            return other
        if other.is_finite or other.tag == self.tag:
            return self
        raise erring.ExtendedArithmeticError('+', self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExtendedRational.coerce(other)
        if not self.is_finite and self.tag == other.tag:
            raise erring.ExtendedArithmeticError('-', self, other)
        return self + (-other)

    def __rsub__(self, other):
        return ExtendedRational.coerce(other) - self

    def __mul__(self, other):
        other = ExtendedRational.coerce(other)
        if self.is_finite and other.is_finite:
            return ExtendedRational(self.value * other.value)
        if self.is_finite and self.value > 0:
            return other
        if other.is_finite and other.value > 0:
            return self
        raise erring.ExtendedArithmeticError('*', self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExtendedRational.coerce(other)
        if not other.is_finite:
            raise erring.ExtendedArithmeticError('/', self, other)
        if other.value == 0:
            raise erring.DivisionByZeroError(self)
        if self.is_finite:
            return ExtendedRational(self.value / other.value)
        if other.value > 0:
            return self
        raise erring.ExtendedArithmeticError('/', self, other)

    def __str__(self):
        if self.tag == self.FINITE:
            return format_rational(self.value)
        if self.tag == self.PLUS_INFINITY:
            return grammar.LIT_GRAMMAR['plus_infinity']
        return grammar.LIT_GRAMMAR['minus_infinity']

    def __repr__(self):
        return 'ExtendedRational({0})'.format(str(self))


PLUS_INFINITY = ExtendedRational(tag=ExtendedRational.PLUS_INFINITY)
MINUS_INFINITY = ExtendedRational(tag=ExtendedRational.MINUS_INFINITY)


def parse_extended_rational(s):
    m = _EXTENDED_RATIONAL_RE.fullmatch(s.strip())
    if m is None:
        raise erring.DecodingError('Invalid extended rational literal; expected "p/q", an integer, "+inf", or "-inf"', s)
    if m.group('infinity') == grammar.LIT_GRAMMAR['plus_infinity']:
        return PLUS_INFINITY
    if m.group('infinity') == grammar.LIT_GRAMMAR['minus_infinity']:
        return MINUS_INFINITY
    return ExtendedRational(parse_rational(s))


def extended_min(*values):
    return min(ExtendedRational.coerce(v) for v in values)




class UnaryAffine(object):
    '''
    The map x -> slope*x + offset, with slope >= 0.
    '''
    __slots__ = ['slope', 'offset']
    def __init__(self, slope, offset):
        slope = to_rational(slope)
        offset = to_rational(offset)
        if slope < 0:
            raise ValueError('UnaryAffine slope must be >= 0')
        self.slope = slope
        self.offset = offset

    def __call__(self, x):
        return self.slope * to_rational(x) + self.offset

    def __eq__(self, other):
        if not isinstance(other, UnaryAffine):
            return NotImplemented
        return self.slope == other.slope and self.offset == other.offset

    def __ne__(self, other):
        if not isinstance(other, UnaryAffine):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self.slope, self.offset))

    def __repr__(self):
        return 'UnaryAffine({0}*x + {1})'.format(self.slope, self.offset)


def fixpoint(h):
    '''
    The fixed point offset/(1 - slope) of a contracting affine map.
    '''
    if h.slope >= 1:
        raise erring.NoFixedPointError(h)
    return h.offset / (1 - h.slope)


def iterate_to_fix(h, x0, steps):
    '''
    Return [x0, h(x0), ..., h^steps(x0)], which increases strictly towards
    fixpoint(h) when x0 lies below it.
    '''
    if not isinstance(steps, int) or isinstance(steps, bool):
        raise TypeError('steps must be an integer')
    if steps < 0:
        raise erring.PreconditionError('iterate_to_fix', 'steps must be >= 0')
    x0 = to_rational(x0)
    if h.slope >= 1:
        raise erring.PreconditionError('iterate_to_fix', 'slope {0} is not < 1'.format(h.slope))
    fix = fixpoint(h)
    if x0 >= fix:
        raise erring.PreconditionError('iterate_to_fix', 'start {0} is not below the fixed point {1}'.format(x0, fix))
    orbit = [x0]
    for _ in range(steps):
        orbit.append(h(orbit[-1]))
    return orbit


def limit_point(h, x):
    '''
    The unique limit point of the increasing orbit x, h(x), h(h(x)), ...:
    the fixed point when the slope is below 1, and +inf otherwise.
    '''
    x = to_rational(x)
    if h(x) <= x:
        raise erring.PreconditionError('limit_point', 'h({0}) = {1} does not exceed {0}'.format(x, h(x)))
    if h.slope < 1:
        return ExtendedRational(fixpoint(h))
    return PLUS_INFINITY
