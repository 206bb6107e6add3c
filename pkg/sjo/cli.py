#
#   Command line interface
#   Copyright EAVISE
#

import os
import sys
import json
import argparse
import logging
from pathlib import Path
import numpy as np

from .errors import SJOError, ConfigError, InvalidPoint
from .space import SiegelJacobiPoint, WeightIndex, box_point, format_complex
from .calculus import ExpPolyTestFunction
from .metric import MetricParams, connection_closed, christoffel_numeric
from .qseries import weak_jacobi, write_golden, check_golden
from .operators import get_operator, list_operators
from .verify import SuiteParameters, run_suite, suite_json, corpus_form, TOLERANCES
from .cfg import suite_path

__all__ = ['main', 'build_parser', 'FORMS']
log = logging.getLogger(__name__)

# Named functions for apply and qexp, mapped to their weight
FORMS = {'phi_-2_1': -2, 'phi_0_1': 0}
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _print(data):
    sys.stdout.write(json.dumps(data, indent=2) + '\n')


def _json_argument(text, name):
    """ Parse a JSON argument, or the contents of a JSON file when the argument is a path. """
    if os.path.isfile(text):
        text = Path(text).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f'{name} should be JSON or a path to a JSON file [{err}]') from None


def _points(args, n, m):
    if not args.point:
        return [box_point(n, m, args.seed)]

    points = []
    for text in args.point:
        data = _json_argument(text, '--point')
        for item in (data if isinstance(data, list) else [data]):
            if not isinstance(item, dict):
                raise InvalidPoint(f'Point should be a JSON object [{item}]')
            points.append(SiegelJacobiPoint.from_json(item))
    return points


def _options(args):
    options = {}
    for item in args.opt or []:
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigError(f'Operator options should look like key=value [{item}]')
        try:
            options[key] = json.loads(value)
        except json.JSONDecodeError:
            options[key] = value
    return options


def _threads(requested):
    cap = os.environ.get('SJO_THREADS')
    if cap is None:
        return requested
    try:
        return max(1, min(requested, int(cap)))
    except ValueError:
        raise ConfigError(f'SJO_THREADS should be an integer [{cap}]') from None


def cmd_verify(args):
    """ Run a verification suite, exiting with 1 when a claim fails. """
    params = SuiteParameters.from_file(suite_path(args.suite))
    if args.seed is not None:
        params.seed = args.seed
    if args.samples is not None:
        params.samples = args.samples
    if args.trunc is not None:
        params.trunc = args.trunc
    if args.claim:
        params.claims = args.claim
    params.threads = _threads(args.threads if args.threads is not None else params.threads)
    params.timing = not args.no_timing

    for item in args.tol or []:
        family, sep, value = item.partition('=')
        if not sep:
            raise ConfigError(f'Tolerance overrides should look like family=value [{item}]')
        try:
            params.tolerances[family] = float(value)
        except ValueError:
            raise ConfigError(f'Tolerance of {family} should be a number [{value}]') from None
    params.validate()

    reports, status = run_suite(params, progress=not args.quiet)
    text = suite_json(reports, params, status)
    if args.out is not None:
        Path(args.out).write_text(text + '\n')
        log.info(f'Saved report to {args.out}')
    sys.stdout.write(text + '\n')
    return EXIT_OK if status else EXIT_FAIL


def cmd_apply(args):
    """ Evaluate an operator on a weak Jacobi form or a random test function. """
    op = get_operator(args.op)
    options = _options(args)

    if args.form in FORMS:
        n, m = 1, 1
        wi = WeightIndex(FORMS[args.form], [[1]])
        f = corpus_form(wi, args.trunc if args.trunc is not None else 50)
    elif args.form == 'test':
        n, m = args.n, args.m
        if op.invariant:
            wi = WeightIndex(0, np.zeros((m, m), dtype=int).tolist())
        else:
            wi = WeightIndex(args.k, np.eye(m, dtype=int).tolist())
        f = ExpPolyTestFunction.random(n, m, args.seed)
    else:
        raise ConfigError(f'Unknown form "{args.form}", should be test or one of {list(FORMS)}')

    if op.arity != 1:
        raise ConfigError(f'apply only supports operators with one argument [{op.name} takes {op.arity}]')
    out = op(f, wi, **options)
    signature = op.signature(wi, n, options.get('variant'))

    values = []
    for x in _points(args, n, m):
        value = out(x)
        if np.ndim(value) == 0:
            value = format_complex(value)
        else:
            value = [[format_complex(v) for v in row] for row in np.atleast_2d(value)]
        values.append({'point': x.to_json(), 'value': value})

    _print({'op': op.name, 'form': args.form, 'options': options, 'signature': signature.to_json(), 'values': values})
    return EXIT_OK


def cmd_qexp(args):
    """ Dump or check golden files of the weak Jacobi forms. """
    if args.action == 'dump':
        if args.form not in FORMS:
            raise ConfigError(f'Unknown form "{args.form}", should be one of {list(FORMS)}')
        trunc = args.trunc if args.trunc is not None else 50
        series = weak_jacobi(FORMS[args.form], trunc)
        path = args.out if args.out is not None else f'{args.form}.csv'
        write_golden(series, path, provenance=f'generated by sjo from the theta and eta products of {args.form}')
        _print({'form': args.form, 'trunc': trunc, 'path': str(path), 'terms': len(series.coeffs)})
        return EXIT_OK

    if args.path is None:
        raise ConfigError('qexp check needs the path of a golden file')
    result = check_golden(args.path)
    _print({'path': args.path, 'ok': result.ok, 'mismatches': [[str(n), str(r)] for n, r in result.mismatches]})
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_christoffel(args):
    """ Dump the sparse Christoffel symbols at a point as CSV. """
    params = MetricParams(args.A, args.B)
    points = _points(args, args.n, args.m)
    if len(points) != 1:
        raise ConfigError(f'christoffel takes a single point [{len(points)}]')
    x = points[0]

    if args.source == 'numeric':
        gamma = christoffel_numeric(x, params)
    else:
        gamma = connection_closed(x, params, args.source)

    text = gamma.to_csv()
    if args.out is not None:
        Path(args.out).write_text(text)
        log.info(f'Saved {args.source} connection to {args.out}')
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_list_ops(args):
    """ Print the operator registry. """
    ops = list_operators(args.n, args.m)
    _print([op.to_json(args.n, args.m) for op in ops])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sjo',
        description='Differential operators on the Siegel-Jacobi space',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument('-q', '--quiet', action='store_true', help='Only log warnings and errors')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def subparser(name, fn, help):
        p = sub.add_parser(name, help=help, description=help, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.set_defaults(fn=fn)
        return p

    p = subparser('verify', cmd_verify, 'Run a verification suite and print its report as JSON')
    p.add_argument('--suite', help='Bundled suite name or path to a configuration file', default='default')
    p.add_argument('--seed', type=int, help='Seed of the suite, overriding the configuration', default=None)
    p.add_argument('--samples', type=int, help='Samples per claim, overriding the configuration', default=None)
    p.add_argument('--trunc', type=int, help='Truncation of q-expansions, overriding the configuration', default=None)
    p.add_argument('--tol', action='append', metavar='family=value', help=f'Tolerance override, families {sorted(TOLERANCES[max(TOLERANCES)])}')
    p.add_argument('--claim', action='append', help='Only check this claim, can be repeated')
    p.add_argument('--threads', type=int, help='Worker threads, capped by SJO_THREADS', default=None)
    p.add_argument('--no-timing', action='store_true', help='Report 0 elapsed time, for byte identical reports')
    p.add_argument('--out', help='Also write the report to this file', default=None)

    p = subparser('apply', cmd_apply, 'Evaluate a covariant operator on a function at one or more points')
    p.add_argument('--op', help='Operator name, see list-ops', required=True)
    p.add_argument('--form', help=f'Function: test or one of {list(FORMS)}', default='test')
    p.add_argument('--point', action='append', help='Point as JSON, eg. \'{"z": "i", "w": "0.2"}\', or a path to a JSON file; Default is a random point')
    p.add_argument('--opt', action='append', metavar='key=value', help='Operator option, eg. variant=b or rows=[0,2]')
    p.add_argument('--n', type=int, help='Degree of the test function', default=1)
    p.add_argument('--m', type=int, help='Number of rows of W of the test function', default=1)
    p.add_argument('--k', type=int, help='Weight of the test function', default=2)
    p.add_argument('--seed', type=int, help='Seed of the test function and random point', default=0)
    p.add_argument('--trunc', type=int, help='Truncation of the weak Jacobi forms', default=None)

    p = subparser('qexp', cmd_qexp, 'Dump or check golden q-expansion files')
    p.add_argument('action', choices=['dump', 'check'])
    p.add_argument('path', nargs='?', help='Golden file to check', default=None)
    p.add_argument('--form', help=f'Form to dump, one of {list(FORMS)}', default='phi_-2_1')
    p.add_argument('--trunc', type=int, help='Exclusive bound of the q exponents', default=None)
    p.add_argument('--out', help='Golden file to write; Default is <form>.csv', default=None)

    p = subparser('christoffel', cmd_christoffel, 'Dump the Christoffel symbols at a point as CSV')
    p.add_argument('--n', type=int, help='Degree', default=1)
    p.add_argument('--m', type=int, help='Number of rows of W', default=1)
    p.add_argument('--point', action='append', help='Point as JSON or a path to a JSON file; Default is a random point')
    p.add_argument('--seed', type=int, help='Seed of the random point', default=0)
    p.add_argument('--source', choices=['general', 'explicit', 'numeric'], help='Closed form or Christoffel formula', default='general')
    p.add_argument('--A', type=float, help='Metric constant A', default=1.0)
    p.add_argument('--B', type=float, help='Metric constant B', default=1.0)
    p.add_argument('--out', help='CSV file to write; Default is stdout', default=None)

    p = subparser('list-ops', cmd_list_ops, 'Print the registered operators as JSON')
    p.add_argument('--n', type=int, help='Degree', default=1)
    p.add_argument('--m', type=int, help='Number of rows of W', default=1)

    return parser


def main(argv=None):
    """ Entry point of the ``sjo`` console script and ``python -m sjo``.

    Returns:
        int: 0 on success, 1 when a claim or golden check fails and 2 on invalid input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_CONFIG if err.code else EXIT_OK

    if args.quiet:
        logging.getLogger('sjo').setConsoleLevel(logging.WARNING)

    try:
        return args.fn(args)
    except SJOError as err:
        log.error(f'{err.__class__.__name__}: {err}')
        return EXIT_CONFIG
