# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Write results as text.  `dumps` returns JSON, or with `table=True` the
"key<TAB>value" table of `FusibleEncoder.encode_table`.  Encoders are kept
per (compact, witnesses) pair.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)

from . import tooling
from .encoding import FusibleEncoder




def _encoder_for(options):
    compact, witnesses = options
    return FusibleEncoder(compact=compact, witnesses=witnesses)

_ENCODERS = tooling.keydefaultdict(_encoder_for)


def dumps(obj, *args, **kwargs):
    '''
    Encode a result.  Keyword options:  `compact` and `witnesses` as for
    `FusibleEncoder`, and `table` for the two-column format.
    '''
    if args:
        raise TypeError('Explicit keyword arguments are required')
    compact = kwargs.pop('compact', False)
    witnesses = kwargs.pop('witnesses', True)
    table = kwargs.pop('table', False)
    if kwargs:
        raise TypeError('Unexpected keyword argument(s) {0}'.format(', '.join('"{0}"'.format(k) for k in kwargs)))
    if not all(x in (True, False) for x in (compact, witnesses, table)):
        raise TypeError('compact, witnesses, and table must be booleans')
    encoder = _ENCODERS[(bool(compact), bool(witnesses))]
    if table:
        return encoder.encode_table(obj)
    return encoder.encode(obj)


def dump(obj, fp, **kwargs):
    '''
    Write `dumps(obj, **kwargs)` to a file-like object.
    '''
    fp.write(dumps(obj, **kwargs))
