# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import collections
import logging
import os
import threading
from . import erring
from . import grammar


logger = logging.getLogger(__name__)




class keydefaultdict(collections.defaultdict):
    '''
    Default dict that passes missing keys to the factory function, rather than
    calling the factory function with no arguments.
    '''
    def __missing__(self, k):
        if self.default_factory is None:
            raise KeyError(k)
        else:
            self[k] = self.default_factory(k)
            return self[k]




class SharedMemo(dict):
    '''
    Memo table that may be shared between threads.  Insertions are serialized
    and the first value stored for a key is kept, so no insertion is lost.
    '''
    def __init__(self, *args, **kwargs):
        dict.__init__(self, *args, **kwargs)
        self._lock = threading.Lock()

    def __setitem__(self, k, v):
        with self._lock:
            if k not in self:
                dict.__setitem__(self, k, v)




def default_work_budget(param):
    '''
    Default budget for an engine:  the environment override if present, else
    `grammar.PARAMS[param]`.
    '''
    raw = os.environ.get(grammar.WORK_BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return grammar.PARAMS[param]
    try:
        budget = int(raw)
    except ValueError:
        raise erring.OptionRangeError('{0} must be a positive integer, got "{1}"'.format(grammar.WORK_BUDGET_ENV_VAR, raw))
    if budget <= 0:
        raise erring.OptionRangeError('{0} must be a positive integer, got "{1}"'.format(grammar.WORK_BUDGET_ENV_VAR, raw))
    return budget


def check_budget(name, value, allow_none=False):
    '''
    Validate a count-like keyword option.
    '''
    if value is None and allow_none:
        return
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError('{0} must be an integer'.format(name))
    if value < 0:
        raise erring.OptionRangeError('{0} must be >= 0'.format(name))




class WorkBudget(object):
    '''
    Counter of work units for one top-level call.
    '''
    __slots__ = ['what', 'limit', 'used']
    def __init__(self, what, limit):
        self.what = what
        self.limit = limit
        self.used = 0

    def charge(self, units=1):
        self.used += units
        if self.used > self.limit:
            logger.debug('Work budget %s exhausted while computing %s', self.limit, self.what)
            raise erring.WorkBudgetExceeded(self.what, self.limit)




def run_trampoline(root, start, memo, budget, on_hit=None):
    '''
    Evaluate mutually recursive procedures without host recursion.

    `start(key)` returns a generator for the call `key`.  The generator yields
    the keys of the calls whose results it needs and receives each result
    back; its return value is the result of `key`.  Results are stored in
    `memo`, and each call that is not already in `memo` costs one unit of
    `budget`.  A call that requests itself, directly or indirectly, is a
    cycle and is reported as a `Bug`.
    '''
    if root in memo:
        if on_hit is not None:
            on_hit(root)
        return memo[root]
    budget.charge()
    stack = [(root, start(root))]
    in_progress = set([root])
    send = None
    while stack:
        key, frame = stack[-1]
        try:
            request = frame.send(send)
        except StopIteration as stop:
            stack.pop()
            in_progress.discard(key)
            memo[key] = stop.value
            send = stop.value
            continue
        if request in memo:
            if on_hit is not None:
                on_hit(request)
            send = memo[request]
            continue
        if request in in_progress:
            raise erring.Bug('Cycle in recursive call graph', request)
        budget.charge()
        stack.append((request, start(request)))
        in_progress.add(request)
        send = None
    return send




def compositions(total, parts):
    '''
    Tuples of `parts` nonnegative integers summing to `total`, in
    lexicographic order.
    '''
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
