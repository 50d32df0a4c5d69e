# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Monte-Carlo estimators of power indices from a black-box oracle.

An oracle is any callable mapping an (N, n) array of +/-1 strings to an (N,)
array of +/-1 values. WeightedLTF instances are oracles.

All sample sizes use Hoeffding bounds with the explicit constant
HOEFFDING_CONSTANT = 2, i.e. Pr[|mean - E| >= t] <= 2 exp(-2 N t^2 / r^2)
for observations with range r.

"""

import math

import numpy as np

from ..core.indices import IndexKind, IndexVector, PartialIndexVector
from ..core.ltf import linear_form
from ..exceptions import InvalidParameter
from ..utils.numerics import HOEFFDING_CONSTANT
from .exact import bias_moments

# Oracle queries are grouped so that one batch holds about 2^20 entries
BATCH_ENTRIES = 2 ** 20


def _check_rate(name, value, upper=1.):
    if not 0 < value < upper:
        raise InvalidParameter(name, value, 'a real in (0, {})'.format(upper))


def _oracle(f):
    return getattr(f, 'values', f)


def shapley_permutation_count(n, gamma, delta_fail):
    """
    Number of random orderings that puts every coordinate within gamma/sqrt(n)
    of its Shapley index with probability 1 - delta_fail/n, hence the whole
    vector within gamma in l2 with probability 1 - delta_fail:

        m = ceil(2 n ln(2n / delta_fail) / gamma^2)

    Pivot observations take values in {0, 2}.

    :param n:
    :param gamma: target l2 error
    :param delta_fail: failure probability
    :return:
    """
    _check_rate('gamma', gamma, upper=np.inf)
    _check_rate('delta_fail', delta_fail)
    return int(math.ceil(HOEFFDING_CONSTANT * n
                         * math.log(2 * n / delta_fail) / gamma ** 2))


def permutation_pivots(oracle, n, m, rng):
    """
    Average pivot of every player over m uniformly random orderings. Each
    ordering costs n + 1 oracle queries (the prefixes of the ordering) and
    yields one observation f(prefix + i) - f(prefix) for every player i.

    :param oracle:
    :param n:
    :param m: number of orderings
    :param rng: numpy Generator
    :return: (n,) array of unbiased Shapley estimates
    """
    oracle = _oracle(oracle)
    totals = np.zeros(n)
    batch = max(1, BATCH_ENTRIES // (n * (n + 1)))
    prefix = np.arange(n + 1)[None, :, None]
    done = 0
    while done < m:
        b = min(batch, m - done)
        perms = rng.permuted(np.tile(np.arange(n), (b, 1)), axis=1)
        ranks = np.empty_like(perms)
        np.put_along_axis(ranks, perms, np.arange(n)[None, :], axis=1)
        X = np.where(ranks[:, None, :] < prefix, 1, -1).astype(np.int8)
        values = np.asarray(oracle(X.reshape(-1, n)),
                            dtype=float).reshape(b, n + 1)
        jumps = values[:, 1:] - values[:, :-1]
        np.add.at(totals, perms, jumps)
        done += b
    return totals / m


def shapley_estimate(oracle, n, gamma, delta_fail, rng):
    """
    Estimates all Shapley indices of a monotone function with
    shapley_permutation_count(n, gamma, delta_fail) random orderings

    :param oracle: black-box monotone function
    :param n:
    :param gamma: l2 accuracy
    :param delta_fail: failure probability
    :param rng: numpy Generator
    :return: IndexVector(SHAPLEY)
    """
    m = shapley_permutation_count(n, gamma, delta_fail)
    values = permutation_pivots(oracle, n, m, rng)
    return IndexVector(IndexKind.SHAPLEY, n, values)


def shapley_estimate_partial(oracle, n, indices, eps, delta, rng):
    """
    Shapley indices on a subset S, each within eps/sqrt(|S|) with confidence
    1 - delta/|S|

    :return: PartialIndexVector(SHAPLEY)
    """
    indices = sorted(indices)
    if not indices:
        return PartialIndexVector(IndexKind.SHAPLEY, n, ())
    _check_rate('eps', eps, upper=np.inf)
    _check_rate('delta', delta)
    k = len(indices)
    m = int(math.ceil(HOEFFDING_CONSTANT * k * math.log(2 * k / delta)
                      / eps ** 2))
    values = permutation_pivots(oracle, n, m, rng)
    return PartialIndexVector(IndexKind.SHAPLEY, n,
                              tuple((i, values[i - 1]) for i in indices))


def chow_sample_count(k, eps, delta):
    """
    Samples needed for k Chow parameters each within eps/sqrt(k) with
    confidence 1 - delta/k: 2 exp(-Delta^2 N / 2) <= delta / k

    :param k: |S|
    :param eps:
    :param delta:
    :return:
    """
    if k == 0:
        return 0
    _check_rate('eps', eps, upper=np.inf)
    _check_rate('delta', delta)
    accuracy = eps / math.sqrt(k)
    return int(math.ceil(HOEFFDING_CONSTANT * math.log(2 * k / delta)
                         / accuracy ** 2))


def _uniform_strings(rng, size, n):
    return (2 * rng.integers(0, 2, size=(size, n)) - 1).astype(np.int8)


def chow_estimate(oracle, n, indices, eps, delta, rng):
    """
    Empirical Chow parameters on S from uniform samples; index 0 stands for
    E[f]

    :param oracle:
    :param n:
    :param indices: subset of {0..n}
    :param eps:
    :param delta:
    :param rng: numpy Generator
    :return: PartialIndexVector(CHOW)
    """
    indices = sorted(indices)
    oracle = _oracle(oracle)
    size = chow_sample_count(len(indices), eps, delta)
    if size == 0:
        return PartialIndexVector(IndexKind.CHOW, n, ())

    mean = 0.
    sums = np.zeros(n)
    batch = max(1, BATCH_ENTRIES // n)
    done = 0
    while done < size:
        b = min(batch, size - done)
        X = _uniform_strings(rng, b, n)
        fx = np.asarray(oracle(X), dtype=float)
        mean += fx.sum()
        sums += fx @ X
        done += b
    estimates = dict(enumerate(sums / size, start=1))
    estimates[0] = mean / size
    return PartialIndexVector(IndexKind.CHOW, n,
                              tuple((i, estimates[i]) for i in indices))


def chow_pbiased_estimate(oracle, n, p, size, rng):
    """
    Empirical p-biased Chow parameters from `size` samples of u_p^n

    :return: IndexVector(CHOW_P), constant = estimate of E_{u_p}[f]
    """
    mu, sigma = bias_moments(p)
    oracle = _oracle(oracle)
    mean = 0.
    sums = np.zeros(n)
    batch = max(1, BATCH_ENTRIES // n)
    done = 0
    while done < size:
        b = min(batch, size - done)
        X = np.where(rng.random((b, n)) < p, 1, -1).astype(np.int8)
        fx = np.asarray(oracle(X), dtype=float)
        mean += fx.sum()
        sums += fx @ ((X - mu) / sigma)
        done += b
    return IndexVector(IndexKind.CHOW_P, n, sums / size, p=p,
                       constant=mean / size)


def hermite_degree1_estimate(f, size, rng):
    """
    Monte-Carlo degree-1 Hermite coefficients E_{x~N(0,1)^n}[f(x) x_i] of a
    unit-norm LTF

    :param f: WeightedLTF with |w|_2 = 1
    :param size: number of Gaussian samples
    :param rng: numpy Generator
    :return: IndexVector(HERMITE), constant = estimate of E[f]
    """
    if abs(f.l2 - 1) > 1e-9:
        raise InvalidParameter('f', str(f), 'an LTF with unit l2 norm')
    mean = 0.
    sums = np.zeros(f.n)
    batch = max(1, BATCH_ENTRIES // f.n)
    done = 0
    while done < size:
        b = min(batch, size - done)
        X = rng.standard_normal((b, f.n))
        fx = np.where(linear_form(f.w, X, f.threshold) >= 0, 1., -1.)
        mean += fx.sum()
        sums += fx @ X
        done += b
    return IndexVector(IndexKind.HERMITE, f.n, sums / size,
                       constant=mean / size)
