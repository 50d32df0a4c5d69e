# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Fast numerical self-checks of the installation: the exactly checkable
identities of the power indices on small random suites

"""

import math

import numpy as np
import pandas as pd

from .analysis.distances import d_chow, d_hamming
from .analysis.exact import shapley_exact
from .analysis.gaussian import pbiased_cdf_gaussian_bound, \
    pbiased_interval_probability
from .analysis.shapley_dist import dshap_pmf_table, shapley_basis, \
    shapley_from_correlations
from .core.generators import eu_1957, random_monotone_ltf, \
    random_regular_ltf
from .core.ltf import from_game, GameSpec, regularity
from .inverse.recover import recover_weights, recover_weights_exhaustive
from .utils.logger import get_bistream_logger


def check_eu_1957(rng, size):
    value = shapley_exact(eu_1957())[6]
    return value == 0, 'Luxembourg index {}'.format(value)


def check_even_split(rng, size):
    values = shapley_exact(from_game(GameSpec((49, 49, 2), 51))).as_array()
    error = float(np.max(np.abs(values - 2. / 3)))
    return error <= 1e-12, 'max error {:.3g}'.format(error)


def check_sum_law(rng, size):
    worst = 0.
    for _ in range(size):
        f = random_monotone_ltf(int(rng.integers(2, 9)), rng)
        total = shapley_exact(f).total()
        worst = max(worst, abs(total - (f.at_ones() - f.at_minus_ones())))
    return worst <= 1e-10, 'max error {:.3g}'.format(worst)


def check_monotonicity(rng, size):
    violations = 0
    for _ in range(size):
        f = random_monotone_ltf(int(rng.integers(2, 9)), rng)
        values = shapley_exact(f).as_array()
        order = np.argsort(f.w)
        violations += int(np.sum(np.diff(values[order]) < -1e-12))
    return violations == 0, '{} violations'.format(violations)


def check_chow_hamming(rng, size):
    violations = 0
    for _ in range(size):
        n = int(rng.integers(2, 9))
        f, g = random_monotone_ltf(n, rng), random_monotone_ltf(n, rng)
        if d_chow(f, g) > 2 * math.sqrt(d_hamming(f, g)) + 1e-12:
            violations += 1
    return violations == 0, '{} violations'.format(violations)


def check_correlation_identity(rng, size):
    worst = 0.
    for _ in range(size):
        f = random_monotone_ltf(int(rng.integers(3, 9)), rng)
        error = np.max(np.abs(shapley_exact(f).as_array()
                              - shapley_from_correlations(f).as_array()))
        worst = max(worst, float(error))
    return worst <= 1e-10, 'max error {:.3g}'.format(worst)


def check_dshap(rng, size):
    worst = 0.
    for n in range(3, 9):
        worst = max(worst, abs(dshap_pmf_table(n).sum() - 1))
        gram = shapley_basis(n).gram()
        worst = max(worst, float(np.max(np.abs(gram - np.eye(n + 1)))))
    return worst <= 1e-9, 'max error {:.3g}'.format(worst)


def check_recover_weights(rng, size):
    mismatches = 0
    for _ in range(size):
        n_T = int(rng.integers(1, 5))
        z1 = int(rng.integers(0, 7))
        m2 = int(rng.integers(z1, z1 ** 2 + 1)) if z1 else 0
        alphas = [None if rng.random() < 0.3 else float(rng.random())
                  for _ in range(n_T)]
        args = (alphas, n_T, 1., float(z1), math.sqrt(m2), 1.,
                float(rng.uniform(0, 1)), float(rng.uniform(-1, 1)))
        dp, brute = recover_weights(*args), recover_weights_exhaustive(*args)
        if dp.feasible != brute.feasible or \
                (dp.feasible and not math.isclose(dp.cost, brute.cost,
                                                  rel_tol=1e-9,
                                                  abs_tol=1e-12)):
            mismatches += 1
    return mismatches == 0, '{} mismatches'.format(mismatches)


def check_berry_esseen(rng, size):
    violations = 0
    for _ in range(max(size // 10, 2)):
        f = random_regular_ltf(16, rng, low=0.8)
        if regularity(f.w) > 0.3:
            continue
        for p in (0.2, 0.5, 0.8):
            a, b = sorted(rng.uniform(-f.l1, f.l1, 2))
            gaussian, bound = pbiased_cdf_gaussian_bound(f.w, p, a, b)
            exact = pbiased_interval_probability(f.w, p, a, b)
            if abs(exact - gaussian) > bound:
                violations += 1
    return violations == 0, '{} violations'.format(violations)


CHECKS = [('eu_1957', check_eu_1957),
          ('even_split', check_even_split),
          ('sum_law', check_sum_law),
          ('monotonicity', check_monotonicity),
          ('chow_vs_hamming', check_chow_hamming),
          ('correlation_identity', check_correlation_identity),
          ('dshap', check_dshap),
          ('recover_weights', check_recover_weights),
          ('berry_esseen', check_berry_esseen)]


def run_selftest(seed=0, size=50, logger=None):
    """
    Runs every check on random suites of the given size

    :param seed:
    :param size: suite size of the randomized checks
    :param logger:
    :return: pandas DataFrame with columns check, passed, detail
    """
    if logger is None:
        logger = get_bistream_logger('powindex.selftest')
    rng = np.random.default_rng(seed)
    rows = []
    for name, check in CHECKS:
        logger.info('Checking {} ...'.format(name))
        passed, detail = check(rng, size)
        if not passed:
            logger.warning('{} failed: {}'.format(name, detail))
        rows.append((name, bool(passed), detail))
    logger.info('Done.')
    return pd.DataFrame(rows, columns=['check', 'passed', 'detail'])
