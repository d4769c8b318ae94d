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
Command-line interface.  Each verb parses its options, calls one library
operation, and writes the result as JSON (or a table) on stdout.

Exit status:  0 on success, 1 for domain errors, 2 when a work budget or
scan cap is exhausted, 64 for malformed input or out-of-range options.
'''


from __future__ import (division, print_function, absolute_import,
                        unicode_literals)


import argparse
import collections
import fractions
import logging
import sys
from . import closure
from . import embedding
from . import encoding
from . import erring
from . import functions
from . import generating
from . import mrecursion
from . import ordinals
from . import successors
from . import veblenstar
from .decoding import TermDecoder
from .version import __version__


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_RESOURCE = 2
EXIT_USAGE = 64

ORDER_NAMES = {-1: 'less', 0: 'equal', 1: 'greater'}

_DECODER = TermDecoder()




class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    '''
    Parser that reports usage errors by raising instead of exiting.
    '''
    def error(self, message):
        raise UsageError('{0}: error: {1}'.format(self.prog, message))


def _arg_type(decode, what):
    def convert(text):
        try:
            return decode(text)
        except erring.DecodingError as e:
            raise argparse.ArgumentTypeError('invalid {0} "{1}":{2}'.format(what, text, e.fmt_msg_with_traceback()))
    convert.__name__ = what
    return convert


rational_arg = _arg_type(_DECODER.decode_rational, 'rational')
extended_rational_arg = _arg_type(_DECODER.decode_extended_rational, 'extended rational')
ordinal_arg = _arg_type(_DECODER.decode_ordinal, 'ordinal term')


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid integer "{0}"'.format(text))
    if value < 0:
        raise argparse.ArgumentTypeError('expected a nonnegative integer, got {0}'.format(value))
    return value




def _cmd_m(args):
    engine = mrecursion.MEngine(args.n, work_budget=args.work_budget)
    trace = engine.trace(args.x)
    if args.witness:
        out = encoding_payload(trace)
        out['witness'] = engine.witness(args.x).to_sexpr()
        return out
    return trace


def _cmd_generate(args):
    system = functions.named_system(args.system)
    return generating.generate(system, args.budget, cap=args.cap, ceiling=args.ceiling)


def _engine(args):
    return successors.successor_engine(args.system, work_budget=args.work_budget, scan_cap=args.scan_cap)


def _successor_result(args, key, value, engine):
    out = collections.OrderedDict()
    out['system'] = args.system
    out['r'] = args.r
    out[key] = value
    out['stats'] = engine.stats()
    return out


def _cmd_succ(args):
    engine = _engine(args)
    return _successor_result(args, 'succ', engine.succ(args.r), engine)


def _cmd_pred(args):
    engine = _engine(args)
    return _successor_result(args, 'pred', engine.pred(args.r), engine)


def _cmd_weakpred(args):
    engine = _engine(args)
    return _successor_result(args, 'weak_pred', engine.weak_pred(args.r), engine)


def _cmd_member(args):
    engine = _engine(args)
    return _successor_result(args, 'in_closure', engine.is_in_closure(args.r), engine)


def _cmd_closure_build(args):
    system = functions.named_system(args.system)
    if len(system.functions) != 1:
        raise erring.DomainError('closure-build needs a system with one generating function')
    return closure.build_closure(system.functions[0].collapse(), system.constants, name=system.name)


def _cmd_ord(args):
    out = collections.OrderedDict()
    if args.op == 'cmp':
        out['order'] = ORDER_NAMES[ordinals.compare(args.a, args.b)]
    elif args.op == 'sum':
        out['result'] = ordinals.nat_sum(args.a, args.b)
    elif args.op == 'prod':
        out['result'] = ordinals.nat_prod(args.a, args.b)
    elif args.op == 'classify':
        out['kind'] = ordinals.classify_limit(args.a)
    elif args.op == 'normalize':
        out['result'] = ordinals.normalize(args.a)
    elif args.op == 'enum':
        found = ordinals.enumerate_terms(args.size_bound, max_arity=args.max_arity)
        out['count'] = len(found)
        out['terms'] = found
    elif args.op == 'type':
        out['kind'] = args.kind
        out['n'] = args.n
        out['order_type'] = ordinals.expected_order_type(args.kind, args.n)
    else:
        raise erring.Bug('Unknown ord operation', args.op)
    return out


def _cmd_star_enum(args):
    found = veblenstar.star_enumerate(args.n, args.size_bound)
    out = collections.OrderedDict()
    out['n'] = args.n
    out['size_bound'] = args.size_bound
    out['count'] = len(found)
    out['terms'] = found
    return out


def _cmd_embed(args):
    emb = embedding.build_embedding(args.n, args.terms)
    out = collections.OrderedDict()
    out['embedding'] = emb
    out['report'] = emb.verify()
    return out


def _cmd_demo(args):
    return embedding.generation_demo(args.n, args.terms, args.budget)


def _cmd_check_invariants(args):
    engine = mrecursion.MEngine(args.n, work_budget=args.work_budget)
    samples = mrecursion.sampling_grid(args.n, engine=engine, step=args.step)
    return mrecursion.check_m_invariants(args.n, samples, engine=engine)


def encoding_payload(obj):
    return encoding.FusibleEncoder().payload(obj)




def build_parser():
    parser = _ArgumentParser(prog='fusible', description='Exact computations with generalized fusible numbers and ordinal terms.')
    parser.add_argument('--version', action='version', version='%(prog)s {0}'.format(__version__))
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', dest='output', action='store_const', const='json', default='json',
                        help='write JSON (default)')
    output.add_argument('--table', dest='output', action='store_const', const='table',
                        help='write one "key<TAB>value" line per result field')
    parser.add_argument('--compact', action='store_true', help='compact JSON')
    parser.add_argument('--verbose', action='store_true', help='log progress to stderr')
    sub = parser.add_subparsers(dest='verb', metavar='VERB')
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def add_work_budget(p):
        p.add_argument('--work-budget', type=_nonnegative_int, default=None,
                       help='work units per top-level call (default: $FUSIBLE_WORK_BUDGET or built-in)')

    p = add('m', _cmd_m, 'evaluate M_n(x) with its intermediate values')
    p.add_argument('--n', type=_nonnegative_int, required=True)
    p.add_argument('--x', type=rational_arg, required=True)
    p.add_argument('--witness', action='store_true', help='include a monotone term for x + M_n(x)')
    add_work_budget(p)

    p = add('generate', _cmd_generate, 'generate F(G,P) up to an application budget')
    p.add_argument('--system', required=True, help='"f<n>" or "f-le-<n>"')
    p.add_argument('--budget', type=_nonnegative_int, required=True)
    p.add_argument('--cap', type=_nonnegative_int, default=None)
    p.add_argument('--ceiling', type=rational_arg, default=None)

    for name, func, help_text in (('succ', _cmd_succ, 'least element of F above r'),
                                  ('pred', _cmd_pred, 'predecessor of a successor element of the closure'),
                                  ('weakpred', _cmd_weakpred, 'largest closure element <= r'),
                                  ('member', _cmd_member, 'whether r is in the closure of F')):
        p = add(name, func, help_text)
        p.add_argument('--system', required=True)
        p.add_argument('--r', type=extended_rational_arg if name == 'succ' else rational_arg, required=True)
        p.add_argument('--scan-cap', type=_nonnegative_int, default=None)
        add_work_budget(p)

    p = add('closure-build', _cmd_closure_build, 'list the functions of the closure system cl(g)')
    p.add_argument('--system', required=True)

    p = add('ord', _cmd_ord, 'ordinal term operations')
    ord_sub = p.add_subparsers(dest='op', metavar='OP')
    ord_sub.required = True
    for op in ('cmp', 'sum', 'prod'):
        q = ord_sub.add_parser(op)
        q.add_argument('a', type=ordinal_arg)
        q.add_argument('b', type=ordinal_arg)
    for op in ('classify', 'normalize'):
        q = ord_sub.add_parser(op)
        q.add_argument('a', type=ordinal_arg)
    q = ord_sub.add_parser('enum')
    q.add_argument('--size-bound', type=_nonnegative_int, required=True)
    q.add_argument('--max-arity', type=_nonnegative_int, default=2)
    q = ord_sub.add_parser('type')
    q.add_argument('--kind', choices=ordinals.ORDER_TYPE_KINDS, required=True)
    q.add_argument('--n', type=_nonnegative_int, required=True)

    p = add('star-enum', _cmd_star_enum, 'sorted V-terms up to a size bound')
    p.add_argument('--n', type=_nonnegative_int, default=3)
    p.add_argument('--size-bound', type=_nonnegative_int, required=True)

    p = add('embed', _cmd_embed, 'embed enumerated V-terms into the rationals')
    p.add_argument('--n', type=_nonnegative_int, default=3)
    p.add_argument('--terms', type=_nonnegative_int, required=True)

    p = add('demo', _cmd_demo, 'generate from the grid function of an embedding')
    p.add_argument('--n', type=_nonnegative_int, default=3)
    p.add_argument('--terms', type=_nonnegative_int, default=100)
    p.add_argument('--budget', type=_nonnegative_int, default=5)

    p = add('check-invariants', _cmd_check_invariants, 'check the identities of M_n on a sampling grid')
    p.add_argument('--n', type=_nonnegative_int, required=True)
    p.add_argument('--step', type=rational_arg, default=fractions.Fraction(1, 16))
    add_work_budget(p)

    return parser




def main(argv=None, stdout=None, stderr=None):
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(parser.format_usage().rstrip(), file=stderr)
        print(e, file=stderr)
        return EXIT_USAGE
    if args.verbose:
        logging.basicConfig(stream=stderr, level=logging.DEBUG, format='%(name)s: %(message)s')
    try:
        result = args.func(args)
    except erring.DecodingError as e:
        print('fusible: malformed input:{0}'.format(e.fmt_msg_with_traceback()), file=stderr)
        return EXIT_USAGE
    except erring.OptionRangeError as e:
        print('fusible: {0}'.format(e), file=stderr)
        return EXIT_USAGE
    except erring.ResourceLimitError as e:
        print('fusible: {0}'.format(e), file=stderr)
        return EXIT_RESOURCE
    except erring.DomainError as e:
        print('fusible: {0}'.format(e), file=stderr)
        return EXIT_DOMAIN
    encoder = encoding.FusibleEncoder(compact=args.compact)
    if args.output == 'table':
        stdout.write(encoder.encode_table(result))
    else:
        text = encoder.encode(result)
        stdout.write(text if text.endswith('\n') else text + '\n')
    logger.info('%s done', args.verb)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
