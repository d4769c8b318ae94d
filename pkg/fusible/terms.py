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
Monotone terms:  closed application trees over constants and generating
functions in which every application is worth more than each of its
arguments.  A monotone term witnesses that its value belongs to F(G,P).

Terms are immutable and may share subterms, so large witnesses are DAGs.
Traversals are iterative and visit each shared node once.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


from . import erring
from . import exact
from . import grammar


OPEN_TERM = grammar.LIT_GRAMMAR['open_term']
CLOSE_TERM = grammar.LIT_GRAMMAR['close_term']




class MonotoneTerm(object):
    '''
    Base class for term nodes.  `value` is the cached exact value.
    '''
    __slots__ = []

    def to_sexpr(self):
        return _to_sexpr(self)

    def __str__(self):
        return self.to_sexpr()


class ConstantTerm(MonotoneTerm):
    '''
    Leaf holding a constant from P.
    '''
    __slots__ = ['value']
    applications = 0
    children = ()
    def __init__(self, value):
        self.value = exact.to_rational(value)

    def __eq__(self, other):
        if not isinstance(other, ConstantTerm):
            return NotImplemented
        return self.value == other.value

    def __ne__(self, other):
        if not isinstance(other, ConstantTerm):
            return NotImplemented
        return self.value != other.value

    def __hash__(self):
        return hash(('const', self.value))

    def __repr__(self):
        return 'ConstantTerm({0})'.format(self.value)


class ApplicationTerm(MonotoneTerm):
    '''
    Application of a generating function to child terms.

    `index` is the position of the function in its system's function list,
    when known.  `applications` counts application nodes of the term viewed
    as a tree.
    '''
    __slots__ = ['function', 'index', 'children', 'value', 'applications', '_sexpr']
    def __init__(self, function, children, index=None, check=True):
        children = tuple(children)
        if len(children) != function.arity:
            raise erring.ArityError('{0} takes {1} argument(s), got {2}'.format(function.name, function.arity, len(children)))
        if not all(isinstance(c, MonotoneTerm) for c in children):
            raise TypeError('Children must be MonotoneTerm instances')
        value = function.evaluate([c.value for c in children])
        if value is None:
            raise erring.DomainError('{0} is undefined at ({1})'.format(function.name, ', '.join(str(c.value) for c in children)))
        if check:
            for n, c in enumerate(children):
                if not value > c.value:
                    raise erring.MonotonicityError([n], value, c.value)
        self.function = function
        self.index = index
        self.children = children
        self.value = value
        self.applications = 1 + sum(c.applications for c in children)
        self._sexpr = None

    def to_sexpr(self):
        if self._sexpr is None:
            self._sexpr = _to_sexpr(self)
        return self._sexpr

    def __eq__(self, other):
        if not isinstance(other, ApplicationTerm):
            return NotImplemented
        return self.to_sexpr() == other.to_sexpr()

    def __ne__(self, other):
        if not isinstance(other, ApplicationTerm):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash(self.to_sexpr())

    def __repr__(self):
        return 'ApplicationTerm({0})'.format(self.to_sexpr())




def _postorder(root):
    '''
    Yield every distinct node of a term, children before parents.
    '''
    seen = set()
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in seen:
            continue
        if expanded or not node.children:
            seen.add(id(node))
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            if id(child) not in seen:
                stack.append((child, False))


def _to_sexpr(root):
    text = {}
    for node in _postorder(root):
        if isinstance(node, ConstantTerm):
            text[id(node)] = str(node.value)
        else:
            cached = node._sexpr
            if cached is None:
                cached = '{0}{1} {2}{3}'.format(OPEN_TERM, node.function.name,
                                               ' '.join(text[id(c)] for c in node.children),
                                               CLOSE_TERM)
                node._sexpr = cached
            text[id(node)] = cached
    return text[id(root)]


def eval_term(t):
    '''
    Re-evaluate a term from its leaves, checking the cached value and the
    monotone-term condition at every node.  A violation is reported with the
    path of child indices leading to the offending node.
    '''
    if not isinstance(t, MonotoneTerm):
        raise TypeError('Expected a MonotoneTerm')
    values = {}
    paths = {id(t): []}
    # Paths are assigned top-down so that errors name a concrete position.
    stack = [t]
    while stack:
        node = stack.pop()
        for n, child in enumerate(node.children):
            if id(child) not in paths:
                paths[id(child)] = paths[id(node)] + [n]
                stack.append(child)
    for node in _postorder(t):
        if isinstance(node, ConstantTerm):
            values[id(node)] = node.value
            continue
        child_values = [values[id(c)] for c in node.children]
        value = node.function.evaluate(child_values)
        if value is None:
            raise erring.DomainError('{0} is undefined at node path [{1}]'.format(node.function.name, ', '.join(str(x) for x in paths[id(node)])))
        if value != node.value:
            raise erring.Bug('Cached term value differs from re-evaluation', node)
        for n, v in enumerate(child_values):
            if not value > v:
                raise erring.MonotonicityError(paths[id(node)] + [n], value, v)
        values[id(node)] = value
    return values[id(t)]


def term_depth(t):
    depth = {}
    for node in _postorder(t):
        depth[id(node)] = 1 + max(depth[id(c)] for c in node.children) if node.children else 0
    return depth[id(t)]
