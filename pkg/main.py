#!/usr/bin/env python
'''ratgen: rational generating functions of two-dimensional difference
equations with constant coefficients'''
import argparse
import json
import logging
import sys

from config.settings import (EXIT_CODES, LOG_CONFIG, ORACLE_PARAMS,
                             RANDOM_BOUNDS, SOLVER_CONFIG)
from analysis.verification import SolutionVerifier
from ratgen.arith import rat_parse
from ratgen.errors import (InitialDataError, ProblemError, RatGenError,
                           RationalFormatError)
from ratgen.generator import generate_problem
from ratgen.oracle import expand_ratfunc, expand_table
from ratgen.recurrence import resolve
from ratgen.solver1d import expand_1d, gf_1d, gf_1d_shifted
from ratgen.solver2d import assemble_gf
from ratgen.writer import FORMATS, WriterFile, ratfunc_from_json, render
from utils.problem_reader import ProblemReader, problem_to_json

reader = ProblemReader()


def parse_rationals(text):
    """Comma separated rationals, e.g. ``-1,1/2,3``"""
    text = text.strip()
    if not text:
        return []
    return [rat_parse(t) for t in text.split(',')]


def parse_vars(text):
    """Two variable names, e.g. ``z,w``"""
    names = tuple(t.strip() for t in text.split(','))
    if len(names) != 2 or not all(names):
        raise ValueError('--vars needs two names, got %r' % text)
    return names


def check_non_negative(option, value):
    """Rejects a negative count given on the command line"""
    if value is not None and value < 0:
        raise ValueError('%s must be non-negative, got %d' % (option, value))
    return value


def setup_logging(verbose=0):
    """Configure the root logger once; -v gives INFO, -vv DEBUG"""
    level = LOG_CONFIG['level']
    if verbose == 1:
        level = 'INFO'
    elif verbose and verbose > 1:
        level = 'DEBUG'
    logging.basicConfig(format=LOG_CONFIG['format'], level=level)
    logging.getLogger().setLevel(level)


def load_problem(path):
    problem = reader.read(path)
    logging.info('problem %s: m = %r, %d lines', path, problem.m,
                 len(problem.lines))
    return problem


def cmd_solve2d(args):
    """Generating function of a problem file, optionally verified"""
    check_non_negative('--verify', args.verify)
    problem = load_problem(args.file)
    if args.vars:
        variables = parse_vars(args.vars)
    else:
        variables = problem.variables or SOLVER_CONFIG['variables']

    data = resolve(problem)
    func = assemble_gf(problem, reduce=not args.no_reduce, data=data)

    if args.claim:
        with open(args.claim, encoding='utf-8') as f:
            func = ratfunc_from_json(f.read())
        logging.info('verifying the claim %s instead of the computed '
                     'function', args.claim)

    print(render(func, args.format, variables))

    size = args.verify
    if size is None and args.claim:
        size = ORACLE_PARAMS['verify_size']
    if size is None:
        return EXIT_CODES['ok']

    verifier = SolutionVerifier(problem, func, size, data=data)
    results = verifier.run_all_checks()
    writer = WriterFile(out=sys.stdout).start()
    writer.writedict(results)
    if verifier.verified:
        writer.writeline('verified on [0,%d]²' % size)
        return EXIT_CODES['ok']

    writer.writeline('verification failed on [0,%d]²' % size)
    logging.error('verification failed: %s', results)
    return EXIT_CODES['mismatch']


def cmd_solve1d(args):
    """One-dimensional generating function of a recurrence"""
    check_non_negative('--expand', args.expand)
    check_non_negative('--start', args.start)
    coeffs = parse_rationals(args.coeffs)
    init = parse_rationals(args.init)
    if args.start is None:
        func = gf_1d(coeffs, init)
    else:
        func = gf_1d_shifted(coeffs, init, args.start)

    print(func.format(args.var))
    if args.expand:
        print(', '.join(str(v) for v in expand_1d(func, args.expand)))
    return EXIT_CODES['ok']


def cmd_gen_random(args):
    """Random valid problem as JSON on standard output"""
    problem = generate_problem(seed=args.seed, max_m=args.max_m,
                               max_order=args.max_order,
                               max_value=args.max_value,
                               hole_probability=args.hole_probability)
    print(json.dumps(problem_to_json(problem), indent=2))
    return EXIT_CODES['ok']


def cmd_table(args):
    """Solution table, origin in the lower-left corner"""
    check_non_negative('--size', args.size)
    problem = load_problem(args.file)
    data = resolve(problem)
    size = (args.size, args.size)
    if args.source == 'gf':
        table = expand_ratfunc(assemble_gf(problem, data=data), size)
    else:
        table = expand_table(problem, size, data=data)
    print(table.render())
    return EXIT_CODES['ok']


def run(pargs=None):
    args = parse_args(pargs)
    setup_logging(args.verbose)

    try:
        return args.func(args)
    except ProblemError as e:
        logging.error('invalid input: %s', e)
        return EXIT_CODES['invalid_input']
    except InitialDataError as e:
        logging.error('initial data: %s', e)
        return EXIT_CODES['initial_data']
    except (RationalFormatError, ValueError, OSError) as e:
        logging.error('invalid input: %s', e)
        return EXIT_CODES['invalid_input']
    except RatGenError as e:
        logging.error('%s', e)
        return EXIT_CODES['error']


def parse_args(pargs=None):
    parser = argparse.ArgumentParser(
        prog='ratgen',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        description=('Rational generating functions of two-dimensional '
                     'difference equations'))

    parser.add_argument('--verbose', '-v', action='count', default=0,
                        help='More logging (repeat for debug output)')

    subparsers = parser.add_subparsers(dest='command', required=True)

    # solve2d
    p = subparsers.add_parser(
        'solve2d', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        help='Generating function of a problem file')
    p.add_argument('file', help='Problem file (JSON)')
    p.add_argument('--format', '-fmt', choices=FORMATS,
                   default=SOLVER_CONFIG['format'], help='Output format')
    p.add_argument('--vars', default=None,
                   help='Rename the variables, e.g. z,w')
    p.add_argument('--verify', type=int, default=None, metavar='N',
                   help='Check against the direct iteration on [0,N]^2')
    p.add_argument('--no-reduce', action='store_true',
                   default=not SOLVER_CONFIG['reduce'],
                   help='Skip the gcd reduction of the result')
    p.add_argument('--claim', default=None, metavar='FILE',
                   help=('Verify this JSON-rendered function instead of the '
                         'computed one'))
    p.set_defaults(func=cmd_solve2d)

    # solve1d
    p = subparsers.add_parser(
        'solve1d', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        help='Generating function of a one-dimensional recurrence')
    p.add_argument('--coeffs', required=True,
                   help=('Coefficients c_0,...,c_mu in increasing order; use '
                         '--coeffs=-1,1 when the list starts with a minus'))
    p.add_argument('--init', required=True,
                   help='Initial values phi(0),...,phi(mu-1)')
    p.add_argument('--start', type=int, default=None,
                   help='Shifted variant: series from phi(start) on')
    p.add_argument('--var', default=SOLVER_CONFIG['variable_1d'],
                   help='Variable name')
    p.add_argument('--expand', type=int, default=0, metavar='N',
                   help='Also print the first N coefficients in 1/z')
    p.set_defaults(func=cmd_solve1d)

    # gen-random
    p = subparsers.add_parser(
        'gen-random', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        help='Random valid problem file')
    p.add_argument('--seed', type=int, required=True, help='Random seed')
    p.add_argument('--max-m', type=int, default=RANDOM_BOUNDS['max_m'],
                   help='Largest m1, m2')
    p.add_argument('--max-order', type=int,
                   default=RANDOM_BOUNDS['max_order'],
                   help='Largest line recurrence order')
    p.add_argument('--max-value', type=int,
                   default=RANDOM_BOUNDS['max_value'],
                   help='Largest numerator/denominator')
    p.add_argument('--hole-probability', type=float,
                   default=RANDOM_BOUNDS['hole_probability'],
                   help='Probability of a derivable hole per overlap slot')
    p.set_defaults(func=cmd_gen_random)

    # table
    p = subparsers.add_parser(
        'table', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        help='Solution table of a problem file')
    p.add_argument('file', help='Problem file (JSON)')
    p.add_argument('--size', type=int, default=ORACLE_PARAMS['table_size'],
                   help='Table covers [0,size]^2')
    p.add_argument('--source', choices=('problem', 'gf'), default='problem',
                   help='Direct iteration or expansion of the result')
    p.set_defaults(func=cmd_table)

    if pargs is not None:
        return parser.parse_args(pargs)

    return parser.parse_args()


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
