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
import fractions
from . import erring
from . import exact
from . import grammar




class LinearFunction(object):
    '''
    Monotone linear map x -> sum(a_i*x_i) + b with nonnegative coefficients.

    Any object with `arity`, `name`, `interchangeable`, and `evaluate(args)`
    may be used as a generating function.  `evaluate()` returns an exact
    rational, or None when the function is undefined at `args`.
    `interchangeable` lists groups of argument positions that may be permuted
    without changing the value.
    '''
    __slots__ = ['coefficients', 'constant', 'name', '_interchangeable']
    def __init__(self, coefficients, constant, name=None):
        if not isinstance(coefficients, (list, tuple)):
            raise TypeError('coefficients must be a list or tuple')
        coefficients = tuple(exact.to_rational(a) for a in coefficients)
        if not coefficients:
            raise erring.ArityError('A LinearFunction needs at least one argument')
        if any(a < 0 for a in coefficients):
            raise ValueError('Coefficients must be >= 0 for a monotone function')
        if name is None:
            name = grammar.LIT_GRAMMAR['default_function_name']
        if not isinstance(name, str) or not name or re.search(r'[\s()]', name):
            raise ValueError('Function names must be nonempty and contain no whitespace or parentheses')
        self.coefficients = coefficients
        self.constant = exact.to_rational(constant)
        self.name = name
        groups = {}
        for index, a in enumerate(coefficients):
            groups.setdefault(a, []).append(index)
        self._interchangeable = tuple(tuple(v) for v in sorted(groups.values()))

    @property
    def arity(self):
        return len(self.coefficients)

    @property
    def interchangeable(self):
        return self._interchangeable

    def __call__(self, *args):
        if len(args) != self.arity:
            raise erring.ArityError('{0} takes {1} argument(s), got {2}'.format(self.name, self.arity, len(args)))
        return sum((a * exact.to_rational(x) for a, x in zip(self.coefficients, args)), self.constant)

    def evaluate(self, args):
        return self(*args)

    def evaluate_extended(self, args):
        '''
        Evaluate on extended rationals.  An infinite argument with a positive
        coefficient makes the result infinite.
        '''
        if len(args) != self.arity:
            raise erring.ArityError('{0} takes {1} argument(s), got {2}'.format(self.name, self.arity, len(args)))
        total = exact.ExtendedRational(self.constant)
        for a, x in zip(self.coefficients, args):
            x = exact.ExtendedRational.coerce(x)
            if a == 0:
                continue
            total = total + x * a
        return total

    def diagonal(self, x):
        '''
        g(x, ..., x).
        '''
        return self(*([x]*self.arity))

    def is_symmetric(self):
        return len(self._interchangeable) == 1

    def collapse(self):
        '''
        Drop the zero-coefficient positions.  Generation from the collapsed
        function yields exactly the same set.
        '''
        kept = [a for a in self.coefficients if a != 0]
        if not kept:
            raise erring.ArityError('{0} has no positive coefficient and cannot be collapsed'.format(self.name))
        if len(kept) == self.arity:
            return self
        return LinearFunction(kept, self.constant, name=self.name)

    def key(self):
        '''
        Identity up to permutation of arguments.
        '''
        return (tuple(sorted(self.coefficients)), self.constant)

    def __eq__(self, other):
        if not isinstance(other, LinearFunction):
            return NotImplemented
        return self.coefficients == other.coefficients and self.constant == other.constant and self.name == other.name

    def __ne__(self, other):
        if not isinstance(other, LinearFunction):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self.coefficients, self.constant, self.name))

    def __repr__(self):
        return 'LinearFunction([{0}], {1}, name={2!r})'.format(', '.join(str(a) for a in self.coefficients),
                                                               self.constant, self.name)


def g_n(n, name=None):
    '''
    g_n(x_1, ..., x_n) = (x_1 + ... + x_n + 1)/n.
    '''
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError('n must be an integer')
    if n < 1:
        raise erring.OptionRangeError('n must be >= 1, got {0}'.format(n))
    third = fractions.Fraction(1, n)
    return LinearFunction([third]*n, third, name=name)




class GeneratorSystem(object):
    '''
    A finite set G of generating functions together with a finite set P of
    constants.  The constants are kept sorted.
    '''
    __slots__ = ['functions', 'constants', 'name']
    def __init__(self, functions, constants, name=None):
        if not isinstance(functions, (list, tuple)) or not isinstance(constants, (list, tuple, set, frozenset)):
            raise TypeError('functions must be a list or tuple, constants a list, tuple, or set')
        if not functions:
            raise ValueError('A generator system needs at least one function')
        for f in functions:
            if not all(hasattr(f, attr) for attr in ('arity', 'name', 'interchangeable', 'evaluate')):
                raise TypeError('Invalid generating function {0!r}'.format(f))
        constants = [exact.to_rational(p) for p in constants]
        if not constants:
            raise ValueError('The constant set P must be nonempty')
        if len(set(constants)) != len(constants):
            raise ValueError('The constant set P must be duplicate-free')
        names = [f.name for f in functions]
        if len(set(names)) != len(names):
            raise ValueError('Function names within a system must be distinct')
        self.functions = tuple(functions)
        self.constants = tuple(sorted(constants))
        self.name = name

    @property
    def min_constant(self):
        return self.constants[0]

    def function(self, name):
        for f in self.functions:
            if f.name == name:
                return f
        raise KeyError(name)

    def __repr__(self):
        return 'GeneratorSystem({0!r}, [{1}])'.format(list(self.functions), ', '.join(str(p) for p in self.constants))


def fusible_system(n):
    '''
    F_n = F({g_n}, {0}).
    '''
    return GeneratorSystem([g_n(n)], [0], name='f{0}'.format(n))


def fusible_le_system(n):
    '''
    F_{<=n} = F({g_1, ..., g_n}, {0}), which is the closure of F_n.
    '''
    return GeneratorSystem([g_n(k, name='g{0}'.format(k)) for k in range(1, n+1)], [0], name='f-le-{0}'.format(n))


_SYSTEM_NAME_RE = re.compile(r'f(?P<le>-le-)?(?P<n>[1-9][0-9]*)')

def named_system(name):
    '''
    Built-in systems:  "f2", "f3", ... and "f-le-2", "f-le-3", ...
    '''
    m = _SYSTEM_NAME_RE.fullmatch(name)
    if m is None:
        raise erring.DomainError('Unknown system "{0}"; expected "f<n>" or "f-le-<n>"'.format(name))
    n = int(m.group('n'))
    if m.group('le'):
        return fusible_le_system(n)
    return fusible_system(n)
