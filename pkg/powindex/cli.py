# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Command-line front end

    powindex indices GAME --kind shapley
    powindex estimate GAME --kind chow --eps 0.1
    powindex reconstruct chow --input partial.json --n 8 --eps 0.2
    powindex sample-dshap --n 10 --count 1000 --output samples.csv
    powindex distance F G --metric chow
    powindex selftest

Exit codes: 0 on success (certified reconstruction), 1 when a
reconstruction is not certified or a self-check fails, 2 on invalid input.

"""

import argparse
import os
import sys
from time import time

import numpy as np
import pandas as pd

from .analysis.distances import d_chow, d_chow_partial, d_hamming, \
    d_shapley, d_shapley_partial
from .analysis.exact import chow_exact, chow_pbiased_exact, \
    coordinate_correlation_pbiased, shapley_exact, shapley_exact_dp
from .analysis.sampling import chow_estimate, chow_pbiased_estimate, \
    hermite_degree1_estimate, shapley_estimate
from .analysis.shapley_dist import dshap_disagreement, dshap_sample
from .core.indices import IndexKind
from .core.ltf import WeightedLTF, ltf_from_dict
from .exceptions import DimensionMismatch, EnumerationCapExceeded, \
    GameFormatError, InvalidParameter
from .inverse.chow import ChowReconstruction
from .inverse.config import ChowReconConfig, ShapReconConfig, VerifyMode, \
    paper_exact_parameters, read_parameters
from .inverse.shapley import ShapleyReconstruction
from .io.json import index_vector_from_dict, json_dumps, load_game, \
    load_index_vector, read_json, save_index_vector, save_result, write_json
from .io.manifest import RunManifest
from .selftest import run_selftest
from .utils.logger import get_bistream_logger, set_console_level

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (GameFormatError, InvalidParameter, DimensionMismatch,
                EnumerationCapExceeded, OSError)


def _indices(text):
    if text is None or text.strip() == '':
        return []
    return sorted({int(i) for i in text.split(',')})


def _write_vector(vector, args):
    if args.output:
        path = save_index_vector(vector, args.output)
        args.outputs.append(str(path))
    elif getattr(args, 'csv', False):
        print(vector.to_frame().to_csv(index=False), end='')
    else:
        print(json_dumps(vector.to_dict()))


def cmd_indices(args):
    """ Exact power indices of a game file """
    f = load_game(args.game)
    args.manifest_data.add_input(args.game)
    kind = IndexKind.parse(args.kind)
    if kind is IndexKind.CHOW:
        if args.p is None or args.p == 0.5:
            vector = chow_exact(f)
        else:
            vector = chow_pbiased_exact(f, args.p)
    elif kind is IndexKind.CHOW_P:
        vector = chow_pbiased_exact(f, 0.5 if args.p is None else args.p)
    elif kind is IndexKind.CORR_P:
        vector = coordinate_correlation_pbiased(f, 0.5 if args.p is None
                                                else args.p)
    elif kind is IndexKind.SHAPLEY:
        if args.step is not None:
            vector = shapley_exact_dp(f, args.step)
        else:
            vector = shapley_exact(f)
    else:
        raise InvalidParameter('kind', kind.value,
                               'chow, chow_p, corr_p or shapley (hermite '
                               'coefficients are only estimated)')
    _write_vector(vector, args)
    return EXIT_OK


def cmd_estimate(args):
    """ Sampled power indices of a game file """
    f = load_game(args.game)
    args.manifest_data.add_input(args.game)
    kind = IndexKind.parse(args.kind)
    rng = args.rng
    if kind is IndexKind.CHOW:
        vector = chow_estimate(f, f.n, range(f.n + 1), args.eps, args.delta,
                               rng)
    elif kind is IndexKind.CHOW_P:
        vector = chow_pbiased_estimate(f, f.n, 0.5 if args.p is None
                                       else args.p, args.samples, rng)
    elif kind is IndexKind.SHAPLEY:
        vector = shapley_estimate(f, f.n, args.eps, args.delta, rng)
    elif kind is IndexKind.HERMITE:
        vector = hermite_degree1_estimate(f.scaled(1. / f.l2), args.samples,
                                          rng)
    else:
        raise InvalidParameter('kind', kind.value,
                               'chow, chow_p, shapley or hermite')
    _write_vector(vector, args)
    return EXIT_OK


def _recon_overrides(args):
    overrides = {'eps': args.eps, 'acceptance': args.acceptance,
                 'head_cap': args.head_cap, 'threads': args.threads,
                 'max_candidates': args.max_candidates}
    if args.verify is not None:
        overrides['verify_mode'] = args.verify
    if args.kind == 'chow':
        overrides.update({'delta': args.delta, 'tau': args.tau})
    else:
        overrides.update({'delta_fail': args.delta,
                          'tau_star': args.tau, 'gamma': args.gamma})
    return {k: v for k, v in overrides.items() if v is not None}


def cmd_reconstruct(args):
    """ Partial inverse power index problem """
    config_class = ChowReconConfig if args.kind == 'chow' else ShapReconConfig
    if args.paper_exact:
        if args.n is None:
            raise InvalidParameter('--n', args.n,
                                   'the n of the parameter table')
        table = paper_exact_parameters(args.kind, args.eps or
                                       config_class.eps, args.n,
                                       args.delta or 0.05)
        print(table.to_string(index=False))
        return EXIT_OK

    if args.input is None or args.n is None:
        raise InvalidParameter('--input/--n', (args.input, args.n),
                               'both an input file and n')
    target = load_index_vector(args.input)
    args.manifest_data.add_input(args.input)

    overrides = _recon_overrides(args)
    if 'threads' not in overrides and 'threads' not in (
            read_parameters(args.config) if args.config else {}):
        overrides['threads'] = os.cpu_count() or 1
    if args.config:
        cfg = config_class.from_yaml(args.config, args.logger, **overrides)
        args.manifest_data.add_input(args.config)
    else:
        cfg = config_class(**overrides)
    args.manifest_data.config = cfg.to_dict()

    solver_class = ChowReconstruction if args.kind == 'chow' \
        else ShapleyReconstruction
    solver = solver_class(target, args.n, config=cfg, rng=args.rng,
                          verbose=args.progress)
    set_console_level(solver.logger, args.log_level)
    result = solver.run()

    if args.output:
        args.outputs.append(str(save_result(result, args.output)))
    else:
        print(json_dumps(result.to_dict()))
    return EXIT_OK if result.certified else EXIT_NOT_CERTIFIED


def cmd_sample_dshap(args):
    """ Samples of the Shapley distribution, one +/-1 string per row """
    X = dshap_sample(args.n, args.rng, size=args.count)
    frame = pd.DataFrame(X, columns=['x{}'.format(i)
                                     for i in range(1, args.n + 1)])
    if args.output:
        if str(args.output).endswith('.json'):
            write_json({'n': args.n, 'samples': X}, args.output)
        else:
            frame.to_csv(args.output, index=False)
        args.outputs.append(str(args.output))
    else:
        print(frame.to_csv(index=False), end='')
    return EXIT_OK


def _load_operand(path):
    """ A game file gives a WeightedLTF, an index file an index vector """
    obj = read_json(path)
    if not isinstance(obj, dict):
        raise GameFormatError('expected a JSON object', path=path)
    try:
        if 'kind' in obj:
            return index_vector_from_dict(obj)
        return ltf_from_dict(obj)
    except (KeyError, TypeError, InvalidParameter) as e:
        raise GameFormatError(str(e), path=path)


def cmd_distance(args):
    f, g = _load_operand(args.f), _load_operand(args.g)
    args.manifest_data.add_input(args.f)
    args.manifest_data.add_input(args.g)
    subset = _indices(args.indices) if args.indices is not None else None
    metric = args.metric
    if metric in ('hamming', 'dshap') and not (isinstance(f, WeightedLTF)
                                              and isinstance(g, WeightedLTF)):
        raise InvalidParameter('metric', metric, 'two game files')
    if metric == 'hamming':
        value = d_hamming(f, g)
    elif metric == 'dshap':
        value = dshap_disagreement(f, g)
    elif metric == 'chow':
        value = d_chow(f, g) if subset is None \
            else d_chow_partial(f, g, subset)
    else:
        value = d_shapley(f, g) if subset is None \
            else d_shapley_partial(f, g, subset)
    print(json_dumps({'metric': metric, 'indices': subset,
                      'distance': value}))
    return EXIT_OK


def cmd_selftest(args):
    table = run_selftest(seed=args.seed, size=args.size, logger=args.logger)
    print(table.to_string(index=False))
    return EXIT_OK if table['passed'].all() else EXIT_NOT_CERTIFIED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=0,
                        help='seed of every random draw')
    common.add_argument('--log-level', default='INFO',
                        help='console log level')
    common.add_argument('--output', '-o', default=None,
                        help='output file (.json or .csv)')
    common.add_argument('--manifest', default=None,
                        help='write a run manifest to this path')

    parser = argparse.ArgumentParser(
        prog='powindex',
        description='Power indices of linear threshold functions and their '
                    'partial inverses')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    kinds = [k.value for k in IndexKind]

    p = subparsers.add_parser('indices', parents=[common],
                              help='exact power indices of a game')
    p.add_argument('game', help='game JSON file')
    p.add_argument('--kind', choices=kinds, default='shapley')
    p.add_argument('--p', type=float, default=None, help='bias')
    p.add_argument('--step', type=float, default=None,
                   help='grid step of the weights, enables the dynamic '
                        'program for Shapley indices')
    p.add_argument('--exact', action='store_true',
                   help='exact computation (the default)')
    p.add_argument('--csv', action='store_true',
                   help='print an index,value table')
    p.set_defaults(func=cmd_indices)

    p = subparsers.add_parser('estimate', parents=[common],
                              help='sampled power indices of a game')
    p.add_argument('game', help='game JSON file')
    p.add_argument('--kind', choices=kinds, default='shapley')
    p.add_argument('--p', type=float, default=None)
    p.add_argument('--eps', type=float, default=0.1)
    p.add_argument('--delta', type=float, default=0.05)
    p.add_argument('--samples', type=int, default=100000,
                   help='sample size of the p-biased and Hermite estimators')
    p.add_argument('--csv', action='store_true')
    p.set_defaults(func=cmd_estimate)

    p = subparsers.add_parser('reconstruct', parents=[common],
                              help='LTF from partial power indices')
    p.add_argument('kind', choices=['chow', 'shapley'])
    p.add_argument('--input', default=None,
                   help='PartialIndexVector JSON file')
    p.add_argument('-n', '--n', type=int, default=None)
    p.add_argument('--eps', type=float, default=None)
    p.add_argument('--delta', type=float, default=None)
    p.add_argument('--tau', type=float, default=None,
                   help='tau (chow) or tau_star (shapley)')
    p.add_argument('--gamma', type=float, default=None,
                   help='granularity of the Shapley solver')
    p.add_argument('--head-cap', type=int, default=None)
    p.add_argument('--acceptance', type=float, default=None)
    p.add_argument('--max-candidates', type=int, default=None)
    p.add_argument('--threads', type=int, default=None,
                   help='worker processes, all cores unless set here or '
                        'in --config')
    p.add_argument('--config', default=None, help='YAML parameter file')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--exact', dest='verify', action='store_const',
                      const=VerifyMode.EXACT.value)
    mode.add_argument('--sampled', dest='verify', action='store_const',
                      const=VerifyMode.SAMPLED.value)
    p.add_argument('--paper-exact', action='store_true',
                   help='print the literal parameter formulas and exit')
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_reconstruct, verify=None)

    p = subparsers.add_parser('sample-dshap', parents=[common],
                              help='samples of the Shapley distribution')
    p.add_argument('-n', '--n', type=int, required=True)
    p.add_argument('--count', type=int, required=True)
    p.set_defaults(func=cmd_sample_dshap)

    p = subparsers.add_parser('distance', parents=[common],
                              help='distance between two games or vectors')
    p.add_argument('f')
    p.add_argument('g')
    p.add_argument('--metric', choices=['hamming', 'chow', 'shapley',
                                        'dshap'], default='chow')
    p.add_argument('--indices', default=None,
                   help='comma separated subset S')
    p.set_defaults(func=cmd_distance)

    p = subparsers.add_parser('selftest', parents=[common],
                              help='fast numerical self-checks')
    p.add_argument('--size', type=int, default=50,
                   help='size of the random suites')
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logger = get_bistream_logger('powindex.cli')
    set_console_level(logger, args.log_level)
    args.logger = logger
    args.rng = np.random.default_rng(args.seed)
    args.outputs = []
    args.manifest_data = RunManifest(
        command=list(sys.argv[1:] if argv is None else argv), seed=args.seed)

    started = time()
    try:
        code = args.func(args)
    except INPUT_ERRORS as e:
        logger.error(str(e))
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.manifest:
        args.manifest_data.outputs = args.outputs
        args.manifest_data.wall_time = time() - started
        args.manifest_data.save(args.manifest)
    return code


if __name__ == '__main__':
    sys.exit(main())
