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
The recursive functions M_n.

For x < 0, M_n(x) = -x.  Otherwise t_0 = 1, t_i = M_n(x - t_{i-1}) for
1 <= i <= n, and M_n(x) = t_n/n.  The points x + M_n(x) are n-fusible.

Evaluation runs on `tooling.run_trampoline`, so the depth of the recursion
is limited only by the work budget.  Each `MEngine` owns a memo table keyed
by the exact argument; the table is a `tooling.SharedMemo`, so one engine
may be used from several threads at once.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import collections
import fractions
import logging
from . import erring
from . import exact
from . import functions
from . import terms
from . import tooling


logger = logging.getLogger(__name__)




class MTrace(object):
    '''
    Intermediate values of one evaluation of M_n.  For x < 0 the recursion
    is not entered and `t` is empty.
    '''
    __slots__ = ['n', 'x', 't', 'output']
    def __init__(self, n, x, t, output):
        self.n = n
        self.x = x
        self.t = tuple(t)
        self.output = output

    @property
    def point(self):
        return self.x + self.output

    def __repr__(self):
        return 'MTrace(n={0}, x={1}, t=[{2}], M={3})'.format(self.n, self.x, ', '.join(str(v) for v in self.t), self.output)


class LevelData(object):
    '''
    U_i(x) and the half-open interval J_i(x) = [x - t_i(x), x + U_i(x)).
    '''
    __slots__ = ['x', 'i', 'upper', 'low', 'high']
    def __init__(self, x, i, upper, low, high):
        self.x = x
        self.i = i
        self.upper = upper
        self.low = low
        self.high = high

    def contains(self, y):
        return self.low <= y < self.high

    def __repr__(self):
        return 'LevelData(x={0}, i={1}, U={2}, J=[{3}, {4}))'.format(self.x, self.i, self.upper, self.low, self.high)




class MEngine(object):
    '''
    Memoized evaluator for M_n.

    Keyword options:

    work_budget:  cache misses allowed per top-level call; defaults to
                  `FUSIBLE_WORK_BUDGET` or `grammar.PARAMS['m_work_budget']`.
    '''
    __slots__ = ['n', 'work_budget', 'g', '_memo', '_witness_memo', '_closure_memo']
    def __init__(self, n, *args, **kwargs):
        if args:
            raise TypeError('Explicit keyword arguments are required')
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError('n must be an integer')
        if n < 2:
            raise erring.OptionRangeError('n must be >= 2, got {0}'.format(n))
        work_budget = kwargs.pop('work_budget', None)
        if work_budget is None:
            work_budget = tooling.default_work_budget('m_work_budget')
        tooling.check_budget('work_budget', work_budget)
        if kwargs:
            raise TypeError('Unexpected keyword argument(s) {0}'.format(', '.join('"{0}"'.format(k) for k in kwargs)))
        self.n = n
        self.work_budget = work_budget
        self.g = functions.g_n(n)
        self._memo = tooling.SharedMemo()
        self._witness_memo = tooling.SharedMemo()
        self._closure_memo = tooling.SharedMemo()

    @property
    def cache_size(self):
        return len(self._memo)

    def _frame(self, x):
        if x < 0:
            return -x
        t = 1
        for _ in range(self.n):
            t = yield x - t
        return t / self.n

    def value(self, x):
        '''
        M_n(x).
        '''
        x = exact.to_rational(x)
        budget = tooling.WorkBudget('M_{0}({1})'.format(self.n, x), self.work_budget)
        return tooling.run_trampoline(x, self._frame, self._memo, budget)

    def t_values(self, x):
        '''
        [t_0(x), ..., t_n(x)] for x >= 0.
        '''
        x = exact.to_rational(x)
        if x < 0:
            raise erring.PreconditionError('t_values', 'x = {0} is negative'.format(x))
        self.value(x)
        t = [fractions.Fraction(1)]
        for _ in range(self.n):
            t.append(self.value(x - t[-1]))
        return t

    def t(self, i, x):
        if not 0 <= i <= self.n:
            raise erring.PreconditionError('t', 'index {0} is outside 0..{1}'.format(i, self.n))
        return self.t_values(x)[i]

    def trace(self, x):
        x = exact.to_rational(x)
        if x < 0:
            return MTrace(self.n, x, (), -x)
        t = self.t_values(x)
        return MTrace(self.n, x, t, t[-1] / self.n)

    def point(self, x):
        '''
        x + M_n(x).
        '''
        x = exact.to_rational(x)
        return x + self.value(x)

    def level(self, i, x):
        x = exact.to_rational(x)
        if x < 0:
            raise erring.PreconditionError('level', 'x = {0} is negative'.format(x))
        if not 0 <= i < self.n:
            raise erring.PreconditionError('level', 'index {0} is outside 0..{1}'.format(i, self.n - 1))
        t_i = self.t(i, x)
        if i == 0:
            upper = exact.PLUS_INFINITY
        else:
            upper = exact.ExtendedRational(t_i / i)
        return LevelData(x, i, upper, exact.ExtendedRational(x - t_i), upper + x)

    def lift(self, i, x, y):
        '''
        l_i^x(y) = (i*x + t_i(x) + y)/(i + 1), defined for y in J_i(x).
        '''
        x = exact.to_rational(x)
        y = exact.to_rational(y)
        level = self.level(i, x)
        if not level.contains(y):
            raise erring.DomainError('y = {0} is outside J_{1}({2}) = [{3}, {4})'.format(y, i, x, level.low, level.high))
        return (i * x + self.t(i, x) + y) / (i + 1)

    def _witness_frame(self, x):
        if x < 0:
            return terms.ConstantTerm(0)
        target = self.point(x)
        t = self.t_values(x)
        children = []
        for i in range(1, self.n + 1):
            child = yield x - t[i - 1]
            if child.value == target:
                return child
            children.append(child)
        return terms.ApplicationTerm(self.g, children, index=0)

    def witness(self, x):
        '''
        Monotone term over F_n = F({g_n}, {0}) whose value is x + M_n(x).
        '''
        x = exact.to_rational(x)
        budget = tooling.WorkBudget('witness of M_{0}({1})'.format(self.n, x), self.work_budget)
        return tooling.run_trampoline(x, self._witness_frame, self._witness_memo, budget)


    def _closure_start(self, key):
        if key[0] == 'weak_pred':
            return self._weak_pred_frame(key[1])
        if key[0] == 'sup_below':
            return self._sup_below_frame(key[1])
        raise erring.Bug('Unknown closure procedure', key)

    def _weak_pred_frame(self, z):
        # With y_i = z - t_{i-1}(z), the largest element <= z is 0 or one of
        # z + (weak_pred(y_i) - y_i)/i.
        if z < 0:
            return exact.MINUS_INFINITY
        best = exact.ExtendedRational(0)
        t = 1
        for i in range(1, self.n + 1):
            y = z - t
            w = yield ('weak_pred', y)
            if w.is_finite:
                candidate = exact.ExtendedRational(z + (w.value - y) / i)
                if candidate > best:
                    best = candidate
            if i < self.n:
                t = self.value(y)
        return best

    def _sup_below_frame(self, z):
        # As for weak_pred, with t replaced by its left limit:  0 where the
        # argument is a closure element, M otherwise.
        if z <= 0:
            return exact.MINUS_INFINITY
        best = exact.ExtendedRational(0)
        t = 1
        for i in range(1, self.n + 1):
            y = z - t
            if y == z:
                return exact.ExtendedRational(z)
            s = yield ('sup_below', y)
            if s.is_finite:
                candidate = exact.ExtendedRational(z + (s.value - y) / i)
                if candidate > best:
                    best = candidate
            if i < self.n:
                if y < 0:
                    t = -y
                else:
                    w = yield ('weak_pred', y)
                    t = 0 if w == y else self.value(y)
        return best

    def _closure_run(self, procedure, x):
        x = exact.to_rational(x)
        budget = tooling.WorkBudget('{0}({1}) in the closure of F_{2}'.format(procedure, x, self.n), self.work_budget)
        return tooling.run_trampoline((procedure, x), self._closure_start, self._closure_memo, budget)

    def weak_pred(self, x):
        '''
        Largest element <= x of the closure of F_n, or -inf for x < 0.
        '''
        return self._closure_run('weak_pred', x)

    def sup_below(self, x):
        '''
        Supremum of the closure elements of F_n strictly below x, or -inf for
        x <= 0.  It equals x exactly when x is a limit from below.
        '''
        return self._closure_run('sup_below', x)




_DEFAULT_ENGINES = tooling.keydefaultdict(MEngine)


def engine(n):
    '''
    Shared default engine for arity n.
    '''
    return _DEFAULT_ENGINES[n]

def m(n, x):
    return engine(n).trace(x)

def m_point(n, x):
    return engine(n).point(x)

def level(n, i, x):
    return engine(n).level(i, x)

def lift(n, i, x, y):
    return engine(n).lift(i, x, y)

def m_witness(n, x):
    return engine(n).witness(x)


def m_naive(n, x):
    '''
    Plain recursive M_n without memoization.  Only usable for small inputs;
    it exists as an independent check of the engine.
    '''
    x = exact.to_rational(x)
    if x < 0:
        return -x
    t = fractions.Fraction(1)
    for _ in range(n):
        t = m_naive(n, x - t)
    return t / n




class InvariantReport(object):
    '''
    Outcome of `check_m_invariants`:  how many instances of each identity or
    inequality were checked, and every violation found.
    '''
    __slots__ = ['n', 'checked', 'violations']
    def __init__(self, n):
        self.n = n
        self.checked = collections.OrderedDict((name, 0) for name in INVARIANT_NAMES)
        self.violations = []

    @property
    def ok(self):
        return not self.violations

    def record(self, name, holds, x, d, i, detail, trace):
        self.checked[name] += 1
        if not holds:
            self.violations.append(collections.OrderedDict([('check', name), ('x', x), ('d', d), ('i', i),
                                                            ('detail', detail), ('trace', trace)]))


INVARIANT_NAMES = ('shift', 'left_limit', 't_lower', 'monotone_point', 't_ratio',
                   't_shift', 't_shift_back', 'level_bound', 'lift', 'lift_iso', 'lift_level')


def check_m_invariants(n, samples, engine=None):
    '''
    Check the identities and inequalities satisfied by M_n on the given
    (x, d, i) samples.  Each check runs only on the samples that satisfy its
    hypothesis; the rest are skipped.

    shift           0 <= d < M(x):  M(x+d) = M(x) - d
    left_limit      0 < d <= M(x):  M(x + M(x) - d) = d
    t_lower         x >= 0, 0 <= j <= n:  t_j(x) >= j*M(x)
    monotone_point  d >= 0, y = x+d:  x+M(x) <= y+M(y), equal iff y < x+M(x)
    t_ratio         x >= 0, 1 <= j < n:  t_j(x)/j >= t_{j+1}(x)/(j+1)
    t_shift         x >= 0, 1 <= i <= n, 0 <= d < t_i(x)/i:  t_i(x+d) = t_i(x) - d*i
    t_shift_back    x >= 0, 0 <= i <= n, 0 <= d <= x:  t_i(x-d) <= t_i(x) + d*i
    level_bound     x >= 0, 0 < i < n:  U_i(x) > M(x)
    lift            x >= 0, 0 <= i < n, y = x - t_i(x) + d in J_i(x):  t_{i+1}(l_i^x(y)) = M(y)
    lift_iso        as lift with i = n-1:  M(l_{n-1}^x(y)) = M(y)/n
    lift_level      as lift with i < n-1:  U_{i+1}(l_i^x(y)) = M(y)/(i+1)
    '''
    if engine is None:
        engine = _DEFAULT_ENGINES[n]
    elif engine.n != n:
        raise erring.ArityError('Engine arity {0} does not match n = {1}'.format(engine.n, n))
    report = InvariantReport(n)
    per_x_done = set()
    value = engine.value
    for x, d, i in samples:
        x = exact.to_rational(x)
        d = exact.to_rational(d)
        trace = engine.trace(x)
        mx = trace.output
        px = trace.point

        if 0 <= d < mx:
            got = value(x + d)
            report.record('shift', got == mx - d, x, d, i, 'M(x+d) = {0}, expected {1}'.format(got, mx - d), trace)
        if 0 < d <= mx:
            got = value(px - d)
            report.record('left_limit', got == d, x, d, i, 'M(x+M(x)-d) = {0}, expected {1}'.format(got, d), trace)
        if d >= 0:
            y = x + d
            py = engine.point(y)
            holds = px <= py and ((px == py) == (y < px))
            report.record('monotone_point', holds, x, d, i, 'x+M(x) = {0}, y+M(y) = {1}'.format(px, py), trace)

        if x < 0:
            continue
        t = trace.t

        if x not in per_x_done:
            per_x_done.add(x)
            for j in range(n + 1):
                report.record('t_lower', t[j] >= j * mx, x, d, j, 't_{0} = {1}, {0}*M = {2}'.format(j, t[j], j * mx), trace)
            for j in range(1, n):
                report.record('t_ratio', t[j] / j >= t[j + 1] / (j + 1), x, d, j,
                              't_{0}/{0} = {1}, t_{2}/{2} = {3}'.format(j, t[j] / j, j + 1, t[j + 1] / (j + 1)), trace)
            for j in range(1, n):
                report.record('level_bound', t[j] / j > mx, x, d, j, 'U_{0} = {1}, M = {2}'.format(j, t[j] / j, mx), trace)

        if not 0 <= i <= n:
            continue
        if i >= 1 and 0 <= d < t[i] / i:
            got = engine.t(i, x + d)
            report.record('t_shift', got == t[i] - d * i, x, d, i, 't_{0}(x+d) = {1}, expected {2}'.format(i, got, t[i] - d * i), trace)
        if 0 <= d <= x:
            got = engine.t(i, x - d)
            report.record('t_shift_back', got <= t[i] + d * i, x, d, i, 't_{0}(x-d) = {1}, bound {2}'.format(i, got, t[i] + d * i), trace)

        if i >= n:
            continue
        level_data = engine.level(i, x)
        y = x - t[i] + d
        if d >= 0 and level_data.contains(y):
            lifted = engine.lift(i, x, y)
            my = value(y)
            got = engine.t(i + 1, lifted)
            report.record('lift', got == my, x, d, i, 't_{0}(l(y)) = {1}, M(y) = {2}'.format(i + 1, got, my), trace)
            if i == n - 1:
                got = value(lifted)
                report.record('lift_iso', got == my / n, x, d, i, 'M(l(y)) = {0}, M(y)/n = {1}'.format(got, my / n), trace)
            else:
                got = engine.level(i + 1, lifted).upper
                report.record('lift_level', got == my / (i + 1), x, d, i,
                              'U_{0}(l(y)) = {1}, M(y)/{2} = {3}'.format(i + 1, got, i + 1, my / (i + 1)), trace)
    logger.debug('Checked M_%d invariants on %d sample(s): %d violation(s)', n, len(samples), len(report.violations))
    return report


SAMPLE_FRACTIONS = (fractions.Fraction(0), fractions.Fraction(1, 4), fractions.Fraction(1, 2), fractions.Fraction(3, 4))

def default_grid_high(n):
    '''
    Upper end of the default sampling range:  3/2 for n = 2, 3/4 for n = 3,
    and 1/(n - 1) for larger n.  Toward 1 for n = 3, and toward 1/2 or 1
    for larger n, evaluating M_n takes more memo entries than any budget.
    '''
    if n == 2:
        return fractions.Fraction(3, 2)
    if n == 3:
        return fractions.Fraction(3, 4)
    return fractions.Fraction(1, n - 1)


def sampling_grid(n, engine=None, step=fractions.Fraction(1, 16), low=-1, high=None, scales=SAMPLE_FRACTIONS):
    '''
    (x, d, i) samples:  x on a grid of the given step over [low, high]
    (default `default_grid_high(n)`), and for each x and index i, d ranging
    over the scales applied to each bound that some check quantifies over
    (M(x), t_i(x)/i, x, and the length of J_i(x)).  Samples with x + d above
    `high` are dropped, so no check evaluates M_n beyond the range.
    '''
    if engine is None:
        engine = _DEFAULT_ENGINES[n]
    if high is None:
        high = default_grid_high(n)
    low = exact.to_rational(low)
    high = exact.to_rational(high)
    step = exact.to_rational(step)
    if step <= 0:
        raise erring.OptionRangeError('step must be positive, got {0}'.format(step))
    samples = []
    seen = set()
    x = low
    while x <= high:
        mx = engine.value(x)
        if x < 0:
            for s in scales:
                if x + s * mx <= high:
                    samples.append((x, s * mx, 0))
        else:
            t = engine.t_values(x)
            for i in range(n + 1):
                bounds = [mx, x]
                if i >= 1:
                    bounds.append(t[i] / i)
                if i < n:
                    bounds.append(t[i] + (t[i] / i if i >= 1 else 1))
                for bound in bounds:
                    for s in scales:
                        sample = (x, s * bound, i)
                        if x + s * bound <= high and sample not in seen:
                            seen.add(sample)
                            samples.append(sample)
        x += step
    return samples
