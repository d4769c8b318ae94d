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
Closure of F({g},P) for a monotone linear g with positive coefficients.

For a proper subset u of the argument positions, fixing the other arguments
to p and setting every argument in u equal to a single variable gives the
affine map x -> (sum of a_j over u)*x + (sum of a_j*p_j outside u) + b.
When its slope is below 1, its fixed point defines the function g_u(p).
The closure of F({g},P) is F(cl(g),P), where cl(g) is g together with
these g_u.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import itertools
import logging
from . import erring
from . import exact
from . import functions
from . import generating
from . import grammar


logger = logging.getLogger(__name__)




class SectionDescriptor(object):
    '''
    The section of `base` that varies the positions in `u` (0-based, sorted)
    together and fixes the remaining positions, in order, to `parameters`.
    '''
    __slots__ = ['base', 'u', 'parameters']
    def __init__(self, base, u, parameters):
        u = tuple(sorted(set(u)))
        if not u or len(u) >= base.arity or u[0] < 0 or u[-1] >= base.arity:
            raise erring.PreconditionError('section', 'u = {0} is not a nonempty proper subset of the {1} argument positions'.format(list(u), base.arity))
        parameters = tuple(exact.to_rational(p) for p in parameters)
        if len(parameters) != base.arity - len(u):
            raise erring.ArityError('Section needs {0} parameter(s), got {1}'.format(base.arity - len(u), len(parameters)))
        self.base = base
        self.u = u
        self.parameters = parameters

    def diagonal(self):
        a = self.base.coefficients
        outside = [j for j in range(self.base.arity) if j not in self.u]
        slope = sum((a[j] for j in self.u), exact.ExactRational(0))
        offset = sum((a[j] * p for j, p in zip(outside, self.parameters)), self.base.constant)
        return exact.UnaryAffine(slope, offset)


def _subset_name(base, u):
    lit = grammar.LIT_GRAMMAR
    return '{0}{1}{2}{3}'.format(base.name, lit['closure_subset_open'],
                                 lit['closure_subset_sep'].join(str(j + 1) for j in u),
                                 lit['closure_subset_close'])




class ClosureFunction(object):
    '''
    g_u(p) = fixpoint of the section of g at u and p.  Its name is the base
    name followed by the 1-based positions of u, as in "g{3}".

    The function is linear:  with s the slope of the section, it equals
    sum(a_j*p_j)/(1 - s) + b/(1 - s) over the positions outside u.
    '''
    __slots__ = ['base', 'u', 'name', 'linear']
    def __init__(self, base, u):
        u = tuple(sorted(u))
        slope = sum((base.coefficients[j] for j in u), exact.ExactRational(0))
        if slope >= 1:
            raise erring.NoFixedPointError(exact.UnaryAffine(slope, 0))
        self.base = base
        self.u = u
        self.name = _subset_name(base, u)
        scale = 1 / (1 - slope)
        outside = [base.coefficients[j] for j in range(base.arity) if j not in u]
        self.linear = functions.LinearFunction([a * scale for a in outside], base.constant * scale, name=self.name)

    @property
    def arity(self):
        return self.base.arity - len(self.u)

    @property
    def interchangeable(self):
        return self.linear.interchangeable

    @property
    def coefficients(self):
        return self.linear.coefficients

    @property
    def constant(self):
        return self.linear.constant

    def section(self, parameters):
        return SectionDescriptor(self.base, self.u, parameters)

    def evaluate(self, args):
        return exact.fixpoint(self.section(args).diagonal())

    def __call__(self, *args):
        return self.evaluate(args)

    def key(self):
        return self.linear.key()

    def __repr__(self):
        return 'ClosureFunction({0!r}, u={1})'.format(self.base.name, [j + 1 for j in self.u])




class ClosureSystem(object):
    '''
    cl(g) together with the constants P.  `derived` lists the g_u in order of
    increasing |u|, then lexicographically by u.
    '''
    __slots__ = ['base', 'derived', 'constants', 'anchor', 'name']
    def __init__(self, base, derived, constants, anchor, name=None):
        self.base = base
        self.derived = tuple(derived)
        self.constants = tuple(sorted(exact.to_rational(p) for p in constants))
        self.anchor = anchor
        self.name = name

    @property
    def functions(self):
        return (self.base,) + self.derived

    def generating_functions(self):
        '''
        cl(g) with functions that agree up to argument order kept once (the
        first one).  Both generate the same values.
        '''
        kept = [self.base]
        keys = set([self.base.key()])
        for f in self.derived:
            if f.key() not in keys:
                keys.add(f.key())
                kept.append(f)
        return kept

    def generator_system(self):
        name = None if self.name is None else 'cl({0})'.format(self.name)
        return functions.GeneratorSystem(self.generating_functions(), list(self.constants), name=name)

    def __repr__(self):
        return 'ClosureSystem({0!r}, {1} derived, P=[{2}])'.format(self.base, len(self.derived), ', '.join(str(p) for p in self.constants))


def build_closure(g, constants, name=None):
    '''
    Build cl(g) over the constants P.  Every coefficient of g must be
    positive, and some p in P must satisfy g(p, ..., p) > p.
    '''
    if not isinstance(g, functions.LinearFunction):
        raise TypeError('build_closure needs a LinearFunction')
    if any(a <= 0 for a in g.coefficients):
        raise erring.ClosureConstructionError('positive coefficients',
                                              'coefficient(s) at position(s) {0} are not positive; collapse the function first'.format(
                                                  ', '.join(str(j + 1) for j, a in enumerate(g.coefficients) if a <= 0)))
    constants = [exact.to_rational(p) for p in constants]
    if not constants:
        raise erring.ClosureConstructionError('nonempty constants', 'the constant set P is empty')
    if len(set(constants)) != len(constants):
        raise erring.ClosureConstructionError('duplicate-free constants', 'the constant set P has duplicates')
    anchor = None
    for p in sorted(constants):
        if g.diagonal(p) > p:
            anchor = p
            break
    if anchor is None:
        raise erring.ClosureConstructionError('growth anchor', 'no p in P satisfies g(p, ..., p) > p')
    derived = []
    for size in range(1, g.arity):
        for u in itertools.combinations(range(g.arity), size):
            if sum(g.coefficients[j] for j in u) < 1:
                derived.append(ClosureFunction(g, u))
    logger.debug('cl(%s) has %d derived function(s)', g.name, len(derived))
    return ClosureSystem(g, derived, constants, anchor, name=name)




class ClosureEnumerator(object):
    '''
    Deterministic enumeration z_1, z_2, ... of the values of monotone terms
    over cl(g) and P:  by number of applications, then by the s-expression
    of the witness.  Values are listed once.

    With a ceiling only values up to the ceiling are listed; the listing is
    still complete below it.  Enumerated elements are kept, so repeated
    scans cost nothing extra.
    '''
    __slots__ = ['system', 'ceiling', '_builder', '_elements']
    def __init__(self, system, ceiling=None):
        self.system = system
        self.ceiling = ceiling
        self._builder = generating.LevelBuilder(system.generator_system(), ceiling=ceiling)
        self._elements = sorted(self._builder.levels[0], key=lambda e: e[1].to_sexpr())

    def __len__(self):
        return len(self._elements)

    def element(self, index):
        '''
        The entry (value, witness) at `index`, or None when the enumeration
        is finite and shorter.
        '''
        while index >= len(self._elements):
            if self._builder.exhausted:
                return None
            level = self._builder.next_level()
            self._elements.extend(sorted(level, key=lambda e: e[1].to_sexpr()))
        return self._elements[index]

    def __iter__(self):
        index = 0
        while True:
            entry = self.element(index)
            if entry is None:
                return
            yield entry
            index += 1

    def values(self, count):
        '''
        The first `count` enumerated values (fewer if the enumeration ends).
        '''
        out = []
        for value, _ in self:
            if len(out) >= count:
                break
            out.append(value)
        return out
