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
Order embedding of the V-term order into the rationals, the grid function
that V induces on the image, and its monotone multilinear extension.

Terms are enumerated as a_0 = 0, a_1, a_2, ... by size, then by
s-expression.  The image of a_{i+1} is e(a_k) + 3^-k + 3^-i, where a_k is
the largest earlier term below a_{i+1}.  Each image e(a_i) is isolated:  no
other image lies closer than 3^-i.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import bisect
import collections
import fractions
import itertools
import logging
from . import erring
from . import exact
from . import functions
from . import generating
from . import tooling
from . import veblenstar


logger = logging.getLogger(__name__)




def enumerate_star_terms(n, term_count):
    '''
    The first `term_count` terms of arity n, by size and then s-expression.
    '''
    tooling.check_budget('term_count', term_count)
    if term_count < 1:
        raise erring.OptionRangeError('term_count must be >= 1')
    size_bound = 0
    while True:
        levels = veblenstar.terms_by_size(n, size_bound)
        out = [t for level in levels for t in level]
        if len(out) >= term_count:
            return out[:term_count]
        size_bound += 1


def _power_of_three(k):
    return fractions.Fraction(1, 3**k)


class _SortedTerms(object):
    '''
    Terms kept in term order, with their enumeration indices.
    '''
    __slots__ = ['terms', 'indices']
    def __init__(self):
        self.terms = []
        self.indices = []

    def position(self, t):
        lo, hi = 0, len(self.terms)
        while lo < hi:
            mid = (lo + hi) // 2
            if veblenstar.star_less(self.terms[mid], t):
                lo = mid + 1
            else:
                hi = mid
        return lo

    def insert(self, t, index):
        pos = self.position(t)
        self.terms.insert(pos, t)
        self.indices.insert(pos, index)
        return pos




class Embedding(object):
    '''
    Enumerated terms of arity `n` with their rational images.
    '''
    __slots__ = ['n', 'terms', 'images', '_index_of']
    def __init__(self, n, terms, images):
        self.n = n
        self.terms = tuple(terms)
        self.images = tuple(images)
        self._index_of = {t: i for i, t in enumerate(self.terms)}

    def __len__(self):
        return len(self.terms)

    def index(self, t):
        return self._index_of[t]

    def image(self, t):
        return self.images[self._index_of[t]]

    def __contains__(self, t):
        return t in self._index_of

    def verify(self):
        '''
        Check order preservation, the neighbor gap bound, and isolation.

        Neighbor gap:  whenever a_i < a_j become neighbors in term order as
        a_N is added, e(a_j) - e(a_i) >= 3^-i + 2*3^-N + 3^-j.  A pair stays
        neighbors until a term between them arrives, and the bound only
        shrinks as N grows, so each pair is checked when it forms.
        '''
        report = EmbeddingReport(len(self.terms))
        ordered = _SortedTerms()
        for N, t in enumerate(self.terms):
            pos = ordered.insert(t, N)
            pairs = []
            if pos > 0:
                pairs.append((ordered.indices[pos - 1], N))
            if pos + 1 < len(ordered.terms):
                pairs.append((N, ordered.indices[pos + 1]))
            for i, j in pairs:
                bound = _power_of_three(i) + 2 * _power_of_three(N) + _power_of_three(j)
                if self.images[j] - self.images[i] < bound:
                    report.gap_violations.append((i, j, N))
        image_order = sorted(range(len(self.terms)), key=lambda i: self.images[i])
        report.order_preserving = image_order == ordered.indices
        if not report.order_preserving:
            report.order_violations = [(i, j) for i, j in zip(ordered.indices, image_order) if i != j]
        sorted_images = [self.images[i] for i in image_order]
        for i, e in enumerate(self.images):
            pos = bisect.bisect_left(sorted_images, e)
            radius = _power_of_three(i)
            for other in sorted_images[max(pos - 1, 0):pos] + sorted_images[pos + 1:pos + 2]:
                if abs(other - e) < radius:
                    report.isolation_violations.append(i)
        return report


class EmbeddingReport(object):
    __slots__ = ['terms', 'order_preserving', 'order_violations',
                 'gap_violations', 'isolation_violations']
    def __init__(self, terms):
        self.terms = terms
        self.order_preserving = None
        self.order_violations = []
        self.gap_violations = []
        self.isolation_violations = []

    @property
    def ok(self):
        return self.order_preserving and not self.gap_violations and not self.isolation_violations


def build_embedding(n, term_count):
    '''
    Enumerate `term_count` terms of arity n and compute their images.
    The result is verified before it is returned.
    '''
    terms = enumerate_star_terms(n, term_count)
    images = [fractions.Fraction(0)]
    ordered = _SortedTerms()
    ordered.insert(terms[0], 0)
    for i, t in enumerate(terms[1:]):
        pos = ordered.position(t)
        k = ordered.indices[pos - 1]
        images.append(images[k] + _power_of_three(k) + _power_of_three(i))
        ordered.insert(t, i + 1)
    emb = Embedding(n, terms, images)
    report = emb.verify()
    if not report.ok:
        raise erring.Bug('Embedding of {0} terms failed verification'.format(term_count), report)
    logger.debug('Embedding of %d term(s) of arity %d built', term_count, n)
    return emb




class GridFunction(object):
    '''
    Table of a monotone function on tuples over a finite grid W.

    As a generating function, `evaluate` returns the table value and None at
    untabulated tuples.
    '''
    __slots__ = ['arity', 'name', 'grid', 'table', '_interchangeable']
    def __init__(self, grid, table, arity, name='g0'):
        self.grid = tuple(sorted(set(exact.to_rational(w) for w in grid)))
        if not self.grid:
            raise erring.DomainError('The grid must be nonempty')
        self.table = collections.OrderedDict(sorted((tuple(k), v) for k, v in table.items()))
        for key in self.table:
            if len(key) != arity:
                raise erring.ArityError('Table tuple {0} does not have {1} coordinate(s)'.format(key, arity))
        self.arity = arity
        self.name = name
        self._interchangeable = tuple((k,) for k in range(arity))

    @property
    def interchangeable(self):
        return self._interchangeable

    def evaluate(self, args):
        return self.table.get(tuple(exact.to_rational(a) for a in args))

    def untabulated_count(self):
        return len(self.grid)**self.arity - len(self.table)

    def monotonicity_violations(self):
        '''
        Pairs of tabulated tuples that are coordinatewise ordered while their
        values are not.
        '''
        items = list(self.table.items())
        out = []
        for (p, u), (q, v) in itertools.permutations(items, 2):
            if all(x <= y for x, y in zip(p, q)) and u > v:
                out.append((p, q))
        return out

    def completed(self, point):
        '''
        Value at a grid tuple:  the least table value at a tabulated tuple
        coordinatewise at or above it, or the largest table value when there
        is none.
        '''
        above = [v for k, v in self.table.items() if all(x <= y for x, y in zip(point, k))]
        if above:
            return min(above)
        return max(self.table.values())


def star_function_on_grid(emb):
    '''
    g0(e(t_1), ..., e(t_n)) = e(V(t_1, ..., t_n)) for every enumerated
    application.  Arguments of an enumerated term have smaller size, so they
    are enumerated too.
    '''
    table = {}
    for t, image in zip(emb.terms, emb.images):
        if t.is_zero:
            continue
        table[tuple(emb.image(a) for a in t.args)] = image
    return GridFunction(emb.images, table, emb.n)


def _coordinate_weights(grid, x):
    if x < grid[0] or x > grid[-1]:
        raise erring.DomainError('Coordinate {0} is outside the grid hull [{1}, {2}]'.format(x, grid[0], grid[-1]))
    pos = bisect.bisect_left(grid, x)
    if grid[pos] == x:
        half = fractions.Fraction(1, 2)
        return ((x, half), (x, half))
    lo = grid[pos - 1]
    hi = grid[pos]
    return ((lo, (hi - x) / (hi - lo)), (hi, (x - lo) / (hi - lo)))


def extend_eval(f, point):
    '''
    Multilinear extension of the completed table of `f`:  the weighted sum
    of the values at the 2^n corners of the grid box around `point`.  A
    coordinate on the grid gives both of its corners weight 1/2.
    '''
    point = tuple(exact.to_rational(x) for x in point)
    if len(point) != f.arity:
        raise erring.ArityError('{0} takes {1} coordinate(s), got {2}'.format(f.name, f.arity, len(point)))
    weights = [_coordinate_weights(f.grid, x) for x in point]
    total = fractions.Fraction(0)
    for corner in itertools.product(*weights):
        w = fractions.Fraction(1)
        for _, a in corner:
            w *= a
        if w:
            total += w * f.completed(tuple(c for c, _ in corner))
    return total


class ExtendedFunction(object):
    '''
    The multilinear extension of a grid function, usable as a generating
    function:  `evaluate` is `extend_eval`.  At grid tuples it returns the
    completed table value.
    '''
    __slots__ = ['base', 'name']
    def __init__(self, base, name=None):
        self.base = base
        self.name = base.name if name is None else name

    @property
    def arity(self):
        return self.base.arity

    @property
    def interchangeable(self):
        return self.base.interchangeable

    def evaluate(self, args):
        return extend_eval(self.base, args)

    def __call__(self, *args):
        return self.evaluate(args)




class DemoReport(object):
    __slots__ = ['n', 'terms', 'budget', 'generated', 'in_image', 'order_isomorphic',
                 'applications_match', 'first_above_zero', 'missing']
    def __init__(self, n, terms, budget):
        self.n = n
        self.terms = terms
        self.budget = budget
        self.generated = 0
        self.in_image = None
        self.order_isomorphic = None
        self.applications_match = None
        self.first_above_zero = None
        self.missing = []

    @property
    def complete(self):
        return not self.missing

    def as_dict(self):
        out = collections.OrderedDict()
        out['n'] = self.n
        out['terms'] = self.terms
        out['budget'] = self.budget
        out['generated'] = self.generated
        out['in_image'] = self.in_image
        out['order_isomorphic'] = self.order_isomorphic
        out['applications_match'] = self.applications_match
        out['first_above_zero'] = None if self.first_above_zero is None else exact.format_rational(self.first_above_zero)
        out['missing'] = [t.to_sexpr() for t in self.missing]
        return out


def generation_demo(n, term_count, budget):
    '''
    Generate F({g0}, {0}) with g0 evaluated by `extend_eval` on the grid
    function of an embedding, and compare it with the term order.
    Generation evaluates only at grid tuples, where the extension is the
    completed table, so every generated value should be an image e(t) whose
    witness has as many applications as t has.

    The generated values, in increasing order, are order-isomorphic to the
    enumerated terms of size up to `budget` when they are exactly the images
    of those terms, listed in star order.  Such terms that are not generated
    are listed in `missing`; an insufficient budget is reported there, not
    raised.
    '''
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise erring.PreconditionError('generation_demo', 'n must be an integer >= 3, got {0!r}'.format(n))
    tooling.check_budget('budget', budget)
    emb = build_embedding(n, term_count)
    g0 = ExtendedFunction(star_function_on_grid(emb))
    system = functions.GeneratorSystem([g0], [0], name='g0-{0}'.format(n))
    fragment = generating.generate(system, budget)
    report = DemoReport(n, term_count, budget)
    report.generated = len(fragment)
    term_of = {e: t for t, e in zip(emb.terms, emb.images)}
    report.in_image = all(v in term_of for v in fragment.values)
    if report.in_image:
        generated_terms = [term_of[v] for v in fragment.values]
        fitting_terms = sorted((t for t in emb.terms if t.size <= budget), key=veblenstar.star_key)
        report.order_isomorphic = generated_terms == fitting_terms
        report.applications_match = all(fragment.witness(v).applications == term_of[v].size for v in fragment.values)
    else:
        report.order_isomorphic = False
        report.applications_match = False
    report.first_above_zero = fragment.least_above(0)
    report.missing = [t for t in emb.terms if t.size <= budget and emb.image(t) not in fragment]
    logger.debug('Generation from g0 of arity %d:  %d value(s), %d missing', n, len(fragment), len(report.missing))
    return report
