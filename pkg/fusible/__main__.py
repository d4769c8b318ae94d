# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, the fusible authors
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import sys
from .cli import main


sys.exit(main())
