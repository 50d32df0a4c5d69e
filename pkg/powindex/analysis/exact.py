# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Exact power indices by enumeration of the hypercube, and by dynamic
programming over (coalition size, integer weight sum) for grid-weight games

"""

from dataclasses import dataclass

import numpy as np
from scipy.special import comb
from scipy.stats import binom

from ..core.cube import check_cap, iter_cube_blocks, pbiased_weights, \
    popcount_block, popcounts
from ..core.indices import IndexKind, IndexVector
from ..core.ltf import integer_representation
from ..exceptions import InvalidParameter
from ..utils.numerics import CHOW_ENUMERATION_CAP, SHAPLEY_DP_CAP, \
    SHAPLEY_ENUMERATION_CAP


def bias_moments(p):
    """
    :param p: bias in (0, 1)
    :return: (mu_p, sigma_p) = (2p - 1, 2 sqrt(p(1-p)))
    """
    if not 0 < p < 1:
        raise InvalidParameter('p', p, 'a bias in (0, 1)')
    return 2 * p - 1, 2 * np.sqrt(p * (1 - p))


def chow_exact(f, cap=CHOW_ENUMERATION_CAP):
    """
    Chow parameters E[f(x)], E[f(x) x_i] under the uniform distribution.
    The sums are accumulated as integers and divided by 2^n once.

    :param f: WeightedLTF
    :param cap: enumeration cap
    :return: IndexVector(CHOW) with the degree-0 coefficient as constant
    """
    check_cap(f.n, cap)
    total = 0
    sums = np.zeros(f.n, dtype=np.int64)
    for _, X in iter_cube_blocks(f.n):
        fx = f.values(X).astype(np.int64)
        total += int(fx.sum())
        sums += fx @ X.astype(np.int64)
    scale = 2. ** f.n
    return IndexVector(IndexKind.CHOW, f.n, sums / scale,
                       constant=total / scale)


def _pbiased_moments(f, p, cap):
    check_cap(f.n, cap)
    mean = 0.
    corr = np.zeros(f.n)
    for start, X in iter_cube_blocks(f.n):
        prob = pbiased_weights(popcount_block(start, len(X), f.n), f.n, p)
        weighted = prob * f.values(X)
        mean += np.sum(weighted)
        corr += weighted @ X
    return float(mean), corr


def chow_pbiased_exact(f, p, cap=CHOW_ENUMERATION_CAP):
    """
    p-biased Chow parameters E_{u_p}[f(x) psi_p(x_i)], with
    psi_p(x) = (x - mu_p) / sigma_p

    :param f: WeightedLTF
    :param p: bias in (0, 1)
    :param cap:
    :return: IndexVector(CHOW_P), constant = E_{u_p}[f]
    """
    mu, sigma = bias_moments(p)
    mean, corr = _pbiased_moments(f, p, cap)
    values = (corr - mu * mean) / sigma
    return IndexVector(IndexKind.CHOW_P, f.n, values, p=p, constant=mean)


def coordinate_correlation_pbiased(f, p, cap=CHOW_ENUMERATION_CAP):
    """
    f*(i, p) = E_{u_p}[f(x) x_i] = sigma_p f^(i, p) + mu_p E_{u_p}[f]

    :param f: WeightedLTF
    :param p: bias in (0, 1)
    :param cap:
    :return: IndexVector(CORR_P), constant = E_{u_p}[f]
    """
    bias_moments(p)
    mean, corr = _pbiased_moments(f, p, cap)
    return IndexVector(IndexKind.CORR_P, f.n, corr, p=p, constant=mean)


def shapley_coefficients(n):
    """
    2 k!(n-1-k)!/n! for k = 0..n-1: the weight of a coalition of size k
    preceding a player in a uniformly random ordering, times the jump size 2

    :param n:
    :return:
    """
    k = np.arange(n)
    return 2. / (n * comb(n - 1, k))


def shapley_exact(f, cap=SHAPLEY_ENUMERATION_CAP, step=None):
    """
    Generalized Shapley indices f<>(i) = E_pi[f(x+(pi, i)) - f(x(pi, i))],
    in [0, 2].

    Player i is pivotal for a coalition S not containing it when f(S) = -1 and
    f(S + i) = +1. Pivotality only depends on the set of predecessors, so the
    index is a sum over coalitions grouped by size.

    :param f: monotone WeightedLTF
    :param cap: enumeration cap
    :param step: if given, weights are multiples of step and the integer
        dynamic program is used instead of enumeration
    :return: IndexVector(SHAPLEY)
    """
    if step is not None:
        return shapley_exact_dp(f, step)

    n = f.n
    check_cap(n, cap)
    table = f.truth_table(cap) > 0
    rows = np.arange(2 ** n, dtype=np.int64)
    sizes = popcounts(n)
    coefficients = shapley_coefficients(n)

    values = np.zeros(n)
    for i in range(n):
        bit = 1 << i
        without = rows[(rows & bit) == 0]
        pivotal = ~table[without] & table[without | bit]
        per_size = np.bincount(sizes[without][pivotal], minlength=n)[:n]
        values[i] = per_size @ coefficients
    return IndexVector(IndexKind.SHAPLEY, n, values)


def coalition_counts(z, total):
    """
    Number of coalitions by (size, integer weight sum)

    :param z: integer weights
    :param total: largest weight sum tracked
    :return: (len(z)+1, total+1) float array
    """
    counts = np.zeros((len(z) + 1, total + 1))
    counts[0, 0] = 1
    for z_j in z:
        z_j = int(z_j)
        if z_j > total:
            continue
        shifted = np.zeros_like(counts)
        shifted[1:, z_j:] = counts[:-1, :total + 1 - z_j]
        counts += shifted
    return counts


def shapley_exact_dp(f, step, cap=SHAPLEY_DP_CAP):
    """
    Pseudo-polynomial Shapley indices for weights on the step grid.

    :param f: monotone WeightedLTF with weights multiple of step
    :param step: grid step
    :param cap: largest n
    :return: IndexVector(SHAPLEY)
    """
    n = f.n
    check_cap(n, cap)
    z, quota = integer_representation(f, step)
    values = np.zeros(n)
    total = int(z.sum())
    if quota <= 0 or quota > total:
        # constant function
        return IndexVector(IndexKind.SHAPLEY, n, values)

    coefficients = shapley_coefficients(n)
    for i in range(n):
        low = max(quota - int(z[i]), 0)
        if low > quota - 1:
            continue
        others = np.delete(z, i)
        counts = coalition_counts(others, quota - 1)
        per_size = counts[:n, low:quota].sum(axis=1)
        values[i] = per_size @ coefficients
    return IndexVector(IndexKind.SHAPLEY, n, values)


@dataclass(frozen=True)
class SliceStatistics:
    """
    Counts of +1 values of f on the weight-k slices of the hypercube (strings
    with k entries +1), overall and with x_i = +1.

    Every exchangeable quantity (uniform, p-biased, D_Shap expectations of f
    and f x_i) is a linear function of these counts.
    """
    n: int
    passing: np.ndarray
    passing_with: np.ndarray

    @property
    def slice_sizes(self):
        return comb(self.n, np.arange(self.n + 1))

    def f_sums(self):
        """ sum of f over each slice """
        return 2 * self.passing - self.slice_sizes

    def fx_sums(self):
        """ sum of f x_i over each slice, shape (n+1, n) """
        k = np.arange(self.n + 1)
        with_i = comb(self.n - 1, k - 1)[:, None]
        return (4 * self.passing_with - 2 * with_i
                - 2 * self.passing[:, None] + self.slice_sizes[:, None])

    def f_averages(self):
        return self.f_sums() / self.slice_sizes

    def fx_averages(self):
        return self.fx_sums() / self.slice_sizes[:, None]

    def slice_pmf(self, p):
        return binom.pmf(np.arange(self.n + 1), self.n, p)

    def pbiased_mean(self, p, drop_constants=False):
        """
        E_{u_p}[f]

        :param p:
        :param drop_constants: f is taken as 0 on 1^n and (-1)^n
        :return:
        """
        averages = self.f_averages()
        if drop_constants:
            averages = averages.copy()
            averages[[0, -1]] = 0
        return float(self.slice_pmf(p) @ averages)

    def pbiased_correlations(self, p):
        """ f*(i, p) = E_{u_p}[f x_i] for every i """
        return self.slice_pmf(p) @ self.fx_averages()


def slice_statistics(f, step=None, cap=CHOW_ENUMERATION_CAP):
    """
    SliceStatistics of an LTF, by the (size, weight sum) dynamic program when
    the weights are multiples of step, else by enumeration

    :param f: WeightedLTF
    :param step: optional grid step
    :param cap:
    :return:
    """
    n = f.n
    if step is not None:
        check_cap(n, SHAPLEY_DP_CAP)
        z, quota = integer_representation(f, step)
        total = int(z.sum())
        passing = np.zeros(n + 1)
        passing_with = np.zeros((n + 1, n))
        low = max(quota, 0)
        if low <= total:
            passing = coalition_counts(z, total)[:, low:].sum(axis=1)
            for i in range(n):
                others = coalition_counts(np.delete(z, i), total)
                low_i = max(quota - int(z[i]), 0)
                passing_with[1:, i] = others[:n, low_i:].sum(axis=1)
        return SliceStatistics(n, passing, passing_with)

    check_cap(n, cap)
    passing = np.zeros(n + 1)
    passing_with = np.zeros((n + 1, n))
    for start, X in iter_cube_blocks(n):
        sizes = popcount_block(start, len(X), n)
        positive = f.values(X) > 0
        passing += np.bincount(sizes[positive], minlength=n + 1)
        for i in range(n):
            mask = positive & (X[:, i] > 0)
            passing_with[:, i] += np.bincount(sizes[mask], minlength=n + 1)
    return SliceStatistics(n, passing, passing_with)
