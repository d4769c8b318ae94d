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
Successor, predecessor, and closure membership for F({g},P) with g linear.

Four procedures call one another:

  * succ(r):  least element of F above r, or +inf.
  * built_succ(r, y):  least s > r of the form g(y_1, ..., y_k, x_{k+1},
    ..., x_n) with every x_j in F and x_j <= r, or +inf.
  * pred(r):  for a successor element r of the closure, its predecessor
    there; -inf for r <= min P.
  * weak_pred(r):  the largest closure element <= r; -inf for r < min P.

r belongs to the closure of F exactly when weak_pred(r) == r.

The calls run as generator frames on `tooling.run_trampoline` and share one
memo table keyed by (procedure, arguments).  pred and weak_pred scan an
enumeration of the closure; an element can only be the answer if it exceeds
every element scanned before it, so succ is only asked about such elements.

The enumeration is the deterministic `closure.ClosureEnumerator`, optionally
preceded by one closure element supplied by a hint source.  For F_n the
source is `mrecursion.MEngine`, whose weak_pred and sup_below name the
answer directly; the scan still confirms it with succ.  pred of a value
already returned by succ(x) is weak_pred(x), since succ is constant on
[weak_pred(x), succ(x)).
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import bisect
import collections
import logging
from . import closure
from . import erring
from . import exact
from . import functions
from . import grammar
from . import mrecursion
from . import tooling


logger = logging.getLogger(__name__)


PROCEDURES = ('succ', 'built_succ', 'pred', 'weak_pred')




class SuccessorEngine(object):
    '''
    Evaluator for the successor procedures of one closure system.

    Keyword options:

    work_budget:  procedure calls that miss the memo plus closure elements
                  scanned, per top-level call; defaults to
                  `FUSIBLE_WORK_BUDGET` or
                  `grammar.PARAMS['successor_work_budget']`.

    scan_cap:     closure elements a single pred or weak_pred scan may
                  inspect; defaults to `grammar.PARAMS['pred_scan_cap']`.

    hints:        object with `weak_pred(r)` and `sup_below(r)` returning
                  closure elements of this system (or -inf); each scan
                  inspects the hinted element first.  Default None.

    An engine keeps mutable state (memo, enumerator, statistics) and must not
    be shared between threads.  Separate engines are independent.
    '''
    __slots__ = ['system', 'g', 'work_budget', 'scan_cap', 'hints', '_memo',
                 '_preimages', '_enumerator', '_budget', '_active_scan_cap',
                 '_calls', '_hits', '_scanned', '_hinted']
    def __init__(self, system, *args, **kwargs):
        if args:
            raise TypeError('Explicit keyword arguments are required')
        if not isinstance(system, closure.ClosureSystem):
            raise TypeError('SuccessorEngine needs a ClosureSystem; see successor_engine() for generator systems')
        work_budget = kwargs.pop('work_budget', None)
        if work_budget is None:
            work_budget = tooling.default_work_budget('successor_work_budget')
        tooling.check_budget('work_budget', work_budget)
        scan_cap = kwargs.pop('scan_cap', None)
        if scan_cap is None:
            scan_cap = grammar.PARAMS['pred_scan_cap']
        tooling.check_budget('scan_cap', scan_cap)
        hints = kwargs.pop('hints', None)
        if hints is not None and not (callable(getattr(hints, 'weak_pred', None)) and callable(getattr(hints, 'sup_below', None))):
            raise TypeError('hints must provide weak_pred() and sup_below()')
        if kwargs:
            raise TypeError('Unexpected keyword argument(s) {0}'.format(', '.join('"{0}"'.format(k) for k in kwargs)))
        self.system = system
        self.g = system.base
        self.work_budget = work_budget
        self.scan_cap = scan_cap
        self.hints = hints
        self._memo = {}
        # succ(x) -> x, for the finite calls made so far
        self._preimages = {}
        self._enumerator = None
        self._budget = None
        self._active_scan_cap = scan_cap
        self._calls = collections.Counter()
        self._hits = collections.Counter()
        self._scanned = 0
        self._hinted = 0

    @property
    def min_constant(self):
        return self.system.constants[0]

    def stats(self):
        '''
        Counts since construction:  calls that ran (memo misses), memo hits,
        closure elements scanned, and how many of those came from hints.
        '''
        out = collections.OrderedDict()
        out['calls'] = collections.OrderedDict((p, self._calls[p]) for p in PROCEDURES)
        out['cache_hits'] = collections.OrderedDict((p, self._hits[p]) for p in PROCEDURES)
        out['scanned'] = self._scanned
        out['hinted'] = self._hinted
        out['memo_size'] = len(self._memo)
        return out


    def _start(self, key):
        self._calls[key[0]] += 1
        if key[0] == 'succ':
            return self._succ_frame(key[1])
        if key[0] == 'built_succ':
            return self._built_succ_frame(key[1], key[2])
        if key[0] == 'pred':
            return self._pred_frame(key[1])
        if key[0] == 'weak_pred':
            return self._weak_pred_frame(key[1])
        raise erring.Bug('Unknown procedure', key)

    def _on_hit(self, key):
        self._hits[key[0]] += 1

    def _run(self, key, scan_cap=None):
        r = key[1]
        self._budget = tooling.WorkBudget('{0}({1})'.format(key[0], r), self.work_budget)
        self._active_scan_cap = self.scan_cap if scan_cap is None else scan_cap
        try:
            return tooling.run_trampoline(key, self._start, self._memo, self._budget, on_hit=self._on_hit)
        finally:
            logger.debug('%s(%s): %d work unit(s), memo size %d', key[0], r, self._budget.used, len(self._memo))
            self._budget = None
            self._active_scan_cap = self.scan_cap


    def _enumerator_for(self, r):
        '''
        Enumerator complete up to r.  It is rebuilt with a higher ceiling when
        r is above the current one; -inf needs nothing above min P.
        '''
        if r.is_finite:
            ceiling = r.value
        elif r < 0:
            ceiling = self.min_constant
        else:
            ceiling = None
        current = self._enumerator
        if current is not None:
            if current.ceiling is None or (ceiling is not None and ceiling <= current.ceiling):
                return current
        logger.debug('Closure enumerator for %r rebuilt with ceiling %s', self.g.name, ceiling)
        self._enumerator = closure.ClosureEnumerator(self.system, ceiling=ceiling)
        return self._enumerator

    def _hint(self, procedure, r):
        if self.hints is None or not r.is_finite:
            return None
        if procedure == 'pred':
            hint = self.hints.sup_below(r.value)
        else:
            hint = self.hints.weak_pred(r.value)
        hint = exact.ExtendedRational.coerce(hint)
        if not hint.is_finite:
            return None
        return hint.value

    def _scan(self, procedure, r):
        '''
        Closure values in enumeration order, charged to the work budget.  A
        hinted element comes first; the enumerator may list it again.
        '''
        cap = self._active_scan_cap
        count = 0
        hint = self._hint(procedure, r)
        if hint is not None:
            count += 1
            self._scanned += 1
            self._hinted += 1
            self._budget.charge()
            yield hint
        for value, _ in self._enumerator_for(r):
            if count >= cap:
                raise erring.ScanCapExhausted(procedure, r, cap)
            count += 1
            self._scanned += 1
            self._budget.charge()
            yield value

    def _constant_above(self, r):
        constants = self.system.constants
        if not r.is_finite:
            return exact.ExtendedRational(constants[0]) if r < 0 else exact.PLUS_INFINITY
        n = bisect.bisect_right(constants, r.value)
        if n == len(constants):
            return exact.PLUS_INFINITY
        return exact.ExtendedRational(constants[n])


    def _succ_frame(self, r):
        if r == exact.PLUS_INFINITY:
            return exact.PLUS_INFINITY
        m = yield ('built_succ', r, ())
        s = min(m, self._constant_above(r))
        if r.is_finite and s.is_finite:
            self._preimages.setdefault(s, r)
        return s

    def _built_succ_frame(self, r, prefix):
        g = self.g
        n = g.arity
        k = len(prefix)
        if k == n:
            return exact.ExtendedRational(g.evaluate(prefix))
        if r == exact.PLUS_INFINITY:
            return exact.PLUS_INFINITY
        a = g.coefficients[k]
        x = yield ('weak_pred', r)
        m = exact.PLUS_INFINITY
        while g.evaluate_extended(prefix + (x,) + (r,)*(n - k - 1)) > r:
            s = yield ('built_succ', r, prefix + (x.value,))
            x1 = x - (s - r) / a
            x2 = yield ('succ', x1)
            candidate = r + (x2 - x1) * a
            if candidate < m:
                m = candidate
            x = yield ('pred', x2)
        return m

    def _pred_frame(self, r):
        if r <= self.min_constant:
            return exact.MINUS_INFINITY
        x = self._preimages.get(r)
        if x is not None:
            z = yield ('weak_pred', x)
            return z
        # Every closure value below `floor` is known to be below a closure
        # value that is still below r.
        floor = None
        for z in self._scan('pred', r):
            if z >= r or (floor is not None and z < floor):
                continue
            s = yield ('succ', exact.ExtendedRational(z))
            if s == r:
                return exact.ExtendedRational(z)
            if s > r:
                raise erring.PreconditionError('pred', '{0} is not in the closure'.format(r))
            floor = s.value
        raise erring.PreconditionError('pred', '{0} is not a successor element of the closure'.format(r))

    def _weak_pred_frame(self, r):
        if r < self.min_constant:
            return exact.MINUS_INFINITY
        floor = None
        for z in self._scan('weak_pred', r):
            if z == r:
                return r
            if z > r or (floor is not None and z < floor):
                continue
            s = yield ('succ', exact.ExtendedRational(z))
            if s > r:
                return exact.ExtendedRational(z)
            if s == r:
                return r
            floor = s.value
        raise erring.Bug('Closure enumeration ended without a weak predecessor', r)


    def succ(self, r):
        r = exact.ExtendedRational.coerce(r)
        return self._run(('succ', r))

    def built_succ(self, r, prefix):
        r = exact.ExtendedRational.coerce(r)
        prefix = tuple(exact.to_rational(y) for y in prefix)
        if len(prefix) > self.g.arity:
            raise erring.PreconditionError('built_succ', 'prefix has {0} value(s) but {1} takes {2}'.format(len(prefix), self.g.name, self.g.arity))
        if any(y > r for y in prefix):
            raise erring.PreconditionError('built_succ', 'every prefix value must be <= r = {0}'.format(r))
        return self._run(('built_succ', r, prefix))

    def pred(self, r, scan_cap=None):
        '''
        Predecessor of the successor element r.  When the scan inspects
        `scan_cap` elements without finding it, `ScanCapExhausted` is raised;
        r is then not certified to be a successor element.
        '''
        r = exact.ExtendedRational.coerce(r)
        tooling.check_budget('scan_cap', scan_cap, allow_none=True)
        return self._run(('pred', r), scan_cap=scan_cap)

    def weak_pred(self, r):
        r = exact.ExtendedRational.coerce(r)
        return self._run(('weak_pred', r))

    def is_in_closure(self, r):
        r = exact.ExtendedRational.coerce(r)
        if not r.is_finite:
            raise erring.PreconditionError('is_in_closure', 'r must be finite, got {0}'.format(r))
        return self.weak_pred(r) == r




def fusible_arity(g, constants):
    '''
    n when F({g}, constants) is F_n = F({g_n}, {0}), else None.
    '''
    if tuple(constants) != (0,) or g.arity < 2:
        return None
    if g.key() != functions.g_n(g.arity).key():
        return None
    return g.arity


def successor_engine(system, **kwargs):
    '''
    Engine for a generator system with a single linear function.
    Zero-coefficient positions are collapsed first; F is unchanged.

    With `scan_hints` (default True), a system that is F_n gets an
    `mrecursion.MEngine` as its hint source; other keyword options go to
    `SuccessorEngine`.
    '''
    scan_hints = kwargs.pop('scan_hints', True)
    if scan_hints not in (True, False):
        raise TypeError('scan_hints must be boolean')
    if isinstance(system, str):
        system = functions.named_system(system)
    if len(system.functions) != 1:
        raise erring.DomainError('The successor procedures need exactly one generating function, got {0}'.format(len(system.functions)))
    g = system.functions[0]
    if not isinstance(g, functions.LinearFunction):
        raise erring.DomainError('The successor procedures need a linear generating function')
    g = g.collapse()
    cl = closure.build_closure(g, system.constants, name=system.name)
    if scan_hints and kwargs.get('hints') is None:
        n = fusible_arity(g, cl.constants)
        if n is not None:
            kwargs['hints'] = mrecursion.MEngine(n, work_budget=kwargs.get('work_budget'))
    return SuccessorEngine(cl, **kwargs)
