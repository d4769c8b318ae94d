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


class FusibleException(Exception):
    '''
    Base fusible exception.
    '''
    pass




class DomainError(FusibleException):
    '''
    Input outside the domain of an operation.
    '''
    def __init__(self, msg):
        self.msg = msg
    def __str__(self):
        return self.msg


class PreconditionError(DomainError):
    '''
    A documented precondition of an operation does not hold.
    '''
    def __init__(self, operation, msg):
        self.operation = operation
        self.msg = msg
    def __str__(self):
        return 'Precondition of {0} violated: {1}'.format(self.operation, self.msg)


class DivisionByZeroError(DomainError):
    '''
    Exact division by zero.
    '''
    def __init__(self, numerator):
        self.numerator = numerator
        self.msg = 'Division of {0} by zero'.format(numerator)


class ExtendedArithmeticError(DomainError):
    '''
    Arithmetic combination of extended rationals that is left undefined, such
    as the difference of two infinities of the same sign.
    '''
    def __init__(self, operation, left, right):
        self.operation = operation
        self.left = left
        self.right = right
        self.msg = 'Undefined extended arithmetic: {0} {1} {2}'.format(left, operation, right)


class NoFixedPointError(DomainError):
    '''
    An affine map with slope >= 1 has no contracting fixed point.
    '''
    def __init__(self, affine):
        self.affine = affine
        self.msg = 'No contracting fixed point for {0!r} (slope must be < 1)'.format(affine)


class ArityError(DomainError):
    '''
    Wrong number of arguments, or terms of incompatible arity.
    '''
    pass


class MonotonicityError(DomainError):
    '''
    An application node of a term does not exceed the values of all of its
    children.  The node path is the list of child indices from the root.
    '''
    def __init__(self, path, value, child_value):
        self.path = path
        self.value = value
        self.child_value = child_value
        self.msg = 'Monotone-term condition violated at node path [{0}]: value {1} does not exceed child value {2}'.format(', '.join(str(x) for x in path), value, child_value)


class NormalFormError(DomainError):
    '''
    An ordinal term is not in normal form.
    '''
    def __init__(self, term, reason):
        self.term = term
        self.reason = reason
        self.msg = 'Term {0} is not in normal form: {1}'.format(term, reason)


class ClosureConstructionError(DomainError):
    '''
    A closure system cannot be built because a precondition fails.
    '''
    def __init__(self, precondition, msg):
        self.precondition = precondition
        self.msg = 'Cannot build closure ({0}): {1}'.format(precondition, msg)




class ResourceLimitError(FusibleException):
    '''
    Base exception for computations cut off by a configured limit.
    '''
    pass


class WorkBudgetExceeded(ResourceLimitError):
    '''
    A top-level call needed more work units than its budget allows.
    '''
    def __init__(self, what, budget):
        self.what = what
        self.budget = budget
    def __str__(self):
        return 'Work budget of {0} exhausted while computing {1}'.format(self.budget, self.what)


class ScanCapExhausted(ResourceLimitError):
    '''
    A closure scan reached its cap without finding the requested element.
    '''
    def __init__(self, procedure, argument, cap):
        self.procedure = procedure
        self.argument = argument
        self.cap = cap
    def __str__(self):
        return '{0}({1}): not certified a successor element within a scan cap of {2}'.format(self.procedure, self.argument, self.cap)




class OptionRangeError(FusibleException, ValueError):
    '''
    An option of an operation, such as an arity or a count, is outside the
    range the operation accepts.
    '''
    pass




class DecodingError(FusibleException):
    '''
    Malformed text input.  The message carries the source and a caret
    pointing at the offending column.
    '''
    def __init__(self, msg, source, offset=None):
        self.msg = msg
        self.source = source
        self.offset = offset
    def fmt_msg_with_traceback(self):
        if self.offset is None:
            return '\n  In "{0}":\n    {1}'.format(self.source, self.msg)
        return '\n  In "{0}" at column {1}:\n    {2}\n    {3}^'.format(self.source, self.offset + 1, self.msg,
                                                                    ' '*min(self.offset, len(self.source)))
    def __str__(self):
        return self.fmt_msg_with_traceback()




class Bug(FusibleException):
    '''
    There is a bug in the program, as opposed to invalid user data.

    This exception is sometimes used at the end of a sequence of if/elif/else
    or in a similar context as a fallthrough.
    '''
    def __init__(self, msg, obj=None):
        self.msg = msg
        self.obj = obj
    def __str__(self):
        if self.obj is None:
            return self.msg
        return '{0} ({1!r})'.format(self.msg, self.obj)
