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

from .decoding import TermDecoder


_DEFAULT_DECODER = TermDecoder()


def load(fp, kind='ordinal', cls=None, **kwargs):
    '''
    Load a term or rational from a file-like object.
    '''
    return loads(fp.read(), kind=kind, cls=cls, **kwargs)


def loads(s, kind='ordinal', cls=None, **kwargs):
    '''
    Load a term or rational from a Unicode or byte string.  `kind` is one of
    "rational", "extended_rational", "ordinal", or "star".
    '''
    if cls is None:
        if not kwargs:
            return _DEFAULT_DECODER.decode(s, kind)
        return TermDecoder(**kwargs).decode(s, kind)
    return cls(**kwargs).decode(s, kind)
