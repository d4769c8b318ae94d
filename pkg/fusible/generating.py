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
Generation of F(G,P) as the set of values of monotone terms.

Terms are generated breadth-first by number of function applications.  Each
value is recorded once, at the smallest application count that reaches it,
together with one witness term.  Among terms of equal application count for
the same value, the witness with the lexicographically smallest
s-expression is kept.  Argument positions with equal coefficients are
filled as multisets (nondecreasing in level and position), so the witness
lists interchangeable arguments in that order.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import bisect
import collections
import logging
from . import erring
from . import exact
from . import grammar
from . import terms
from . import tooling


logger = logging.getLogger(__name__)




class LevelBuilder(object):
    '''
    Incremental construction of the application-count levels of F(G,P).

    `levels[k]` holds the (value, witness) pairs first reached with exactly
    `k` applications, sorted by value.  With a ceiling, values above it are
    never recorded; since every application exceeds its arguments, this
    loses nothing below the ceiling.
    '''
    __slots__ = ['system', 'ceiling', 'levels', 'seen']
    def __init__(self, system, ceiling=None):
        self.system = system
        if ceiling is not None:
            ceiling = exact.to_rational(ceiling)
        self.ceiling = ceiling
        level_0 = [(p, terms.ConstantTerm(p)) for p in system.constants if ceiling is None or p <= ceiling]
        self.levels = [level_0]
        self.seen = {v: t for v, t in level_0}

    @property
    def applications(self):
        return len(self.levels) - 1

    @property
    def exhausted(self):
        '''
        Whether no further level can contain a value.  A value first reached
        with k applications has children from levels summing to k - 1, so
        once k - 1 exceeds the largest arity times the highest nonempty
        level, every later level is empty.
        '''
        highest = max(k for k, level in enumerate(self.levels) if level or k == 0)
        max_arity = max(f.arity for f in self.system.functions)
        return len(self.levels) - 1 > max_arity * highest

    def next_level(self):
        k = len(self.levels)
        ceiling = self.ceiling
        seen = self.seen
        candidates = {}
        for index, function in enumerate(self.system.functions):
            for choice in _argument_choices(function, self.levels, k - 1):
                children = [self.levels[c][i][1] for c, i in choice]
                args = [child.value for child in children]
                value = function.evaluate(args)
                if value is None or value in seen:
                    continue
                if ceiling is not None and value > ceiling:
                    continue
                if not all(value > a for a in args):
                    continue
                term = terms.ApplicationTerm(function, children, index=index, check=False)
                incumbent = candidates.get(value)
                if incumbent is None or term.to_sexpr() < incumbent.to_sexpr():
                    candidates[value] = term
        level = sorted(candidates.items())
        self.levels.append(level)
        seen.update(level)
        logger.debug('Level %d of %r: %d new value(s)', k, self.system.name, len(level))
        return level


def _argument_choices(function, levels, total):
    '''
    Yield tuples of (level, index) pairs, one per argument position, whose
    levels sum to `total`.  Within a group of interchangeable positions the
    pairs are nondecreasing.
    '''
    arity = function.arity
    previous_in_group = [None]*arity
    for group in function.interchangeable:
        for a, b in zip(group, group[1:]):
            previous_in_group[b] = a
    choice = [None]*arity

    # Positions are filled left to right; the recursion depth is the arity.
    def fill(position, remaining):
        if position == arity - 1:
            counts = [remaining]
        else:
            counts = range(remaining + 1)
        previous = previous_in_group[position]
        for c in counts:
            if c >= len(levels):
                break
            start = 0
            if previous is not None:
                pc, pi = choice[previous]
                if c < pc:
                    continue
                if c == pc:
                    start = pi
            for i in range(start, len(levels[c])):
                choice[position] = (c, i)
                if position == arity - 1:
                    yield tuple(choice)
                else:
                    for result in fill(position + 1, remaining - c):
                        yield result
        choice[position] = None

    if total < 0:
        return
    for result in fill(0, total):
        yield result




class Fragment(object):
    '''
    A finite generated part of F(G,P):  sorted values with one witness each.

    Every value reachable with at most `budget` applications (and at most
    `ceiling`, when set) is present unless `truncated` is true.
    '''
    __slots__ = ['system', 'budget', 'cap', 'ceiling', 'values', 'witnesses',
                 'truncated', 'level_sizes', '_index']
    def __init__(self, system, budget, cap, ceiling, entries, truncated, level_sizes):
        self.system = system
        self.budget = budget
        self.cap = cap
        self.ceiling = ceiling
        entries = sorted(entries, key=lambda e: e[0])
        self.values = [v for v, _ in entries]
        self.witnesses = [t for _, t in entries]
        self.truncated = truncated
        self.level_sizes = level_sizes
        self._index = {v: n for n, v in enumerate(self.values)}

    def __len__(self):
        return len(self.values)

    def __contains__(self, value):
        return exact.to_rational(value) in self._index

    def __iter__(self):
        return iter(self.values)

    def witness(self, value):
        return self.witnesses[self._index[exact.to_rational(value)]]

    def least_above(self, r):
        '''
        Least fragment value strictly above `r`, or None.
        '''
        r = exact.ExtendedRational.coerce(r)
        if not r.is_finite:
            if r < 0 and self.values:
                return self.values[0]
            return None
        n = bisect.bisect_right(self.values, r.value)
        if n == len(self.values):
            return None
        return self.values[n]

    def __repr__(self):
        return 'Fragment({0!r}, budget={1}, {2} value(s){3})'.format(self.system.name, self.budget, len(self.values),
                                                                     ', truncated' if self.truncated else '')


def generate(system, budget, cap=None, ceiling=None):
    '''
    Generate all values of F(G,P) reachable with at most `budget`
    applications, up to `cap` values.  When the cap truncates a level, the
    smallest values of that level are kept.
    '''
    tooling.check_budget('budget', budget)
    if cap is None:
        cap = grammar.PARAMS['generation_cap']
    tooling.check_budget('cap', cap)
    builder = LevelBuilder(system, ceiling=ceiling)
    entries = list(builder.levels[0])
    truncated = False
    if len(entries) > cap:
        entries = entries[:cap]
        truncated = True
    level_sizes = [len(entries)]
    while not truncated and builder.applications < budget:
        level = builder.next_level()
        room = cap - len(entries)
        if len(level) > room:
            level = level[:room]
            truncated = True
        entries.extend(level)
        level_sizes.append(len(level))
    if truncated:
        logger.debug('Generation of %r truncated at %d value(s)', system.name, cap)
    return Fragment(system, budget, cap, builder.ceiling, entries, truncated, level_sizes)




def _factor(n):
    factors = collections.Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] += 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] += 1
    return factors


def denominator_profile(values):
    '''
    Map each prime dividing some denominator to its largest exponent.
    '''
    profile = {}
    for v in values:
        v = exact.to_rational(v)
        for p, e in _factor(v.denominator).items():
            if e > profile.get(p, 0):
                profile[p] = e
    return dict(sorted(profile.items()))


def is_power_of(n, base):
    '''
    Whether the positive integer n is base**k for some k >= 0.
    '''
    if n <= 0:
        raise erring.DomainError('{0} is not positive'.format(n))
    while n % base == 0:
        n //= base
    return n == 1
