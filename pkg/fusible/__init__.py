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


import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())


from .version import __version__, __version_info__


from .loading import load, loads
from .dumping import dump, dumps
from .decoding import TermDecoder
from .encoding import FusibleEncoder
from .functions import LinearFunction, GeneratorSystem, fusible_system, fusible_le_system, named_system
from .generating import generate
from .mrecursion import MEngine, m, m_point, m_witness, check_m_invariants
from .closure import build_closure
from .successors import SuccessorEngine, successor_engine
from .ordinals import OrdinalTerm, phi, compare, nat_sum, nat_prod, normalize
from .veblenstar import StarTerm, star_compare
from .embedding import build_embedding, extend_eval, generation_demo
