# -*- coding: utf-8 -*-

from __future__ import (division, print_function, absolute_import,
                        unicode_literals)

import collections

VersionInfo = collections.namedtuple('VersionInfo', ['major', 'minor', 'micro',
                                                     'releaselevel', 'serial'])

__version_info__ = VersionInfo(0, 1, 0, 'final', 0)
__version__ = '{0}.{1}.{2}'.format(*__version_info__[:3])
