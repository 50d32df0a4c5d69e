# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Recovery of tail weights with prescribed l1 and l2 norms that best fit an
affine relation between weights and known Shapley indices.

The weights are integer multiples z_i of gamma. A suffix dynamic program
indexed by (position, sum of z, sum of z^2) finds the least cost, the
weights are then read forward, smallest z first.

"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core.indices import PartialIndexVector
from ..exceptions import DimensionMismatch, EnumerationCapExceeded, \
    InvalidParameter
from ..utils.numerics import RECOVER_STATE_CAP, REL_TOL, grid_round, \
    is_grid_multiple


@dataclass(frozen=True)
class RecoverResult:
    """
    weights is None when no weight vector meets the constraints
    """
    weights: tuple
    cost: float
    feasible: bool
    integers: tuple = None

    @classmethod
    def infeasible(cls):
        return cls(None, math.inf, False)


def alpha_array(alphas, n_T):
    """
    Known indices by tail position, NaN where unknown

    :param alphas: PartialIndexVector or dict keyed by 1-based tail position,
        or a sequence of length n_T with None for unknown positions
    :param n_T: tail size
    :return: float array of length n_T
    """
    out = np.full(n_T, np.nan)
    if isinstance(alphas, PartialIndexVector):
        alphas = alphas.as_dict()
    if isinstance(alphas, dict):
        for i, value in alphas.items():
            if not 1 <= i <= n_T:
                raise InvalidParameter('alphas', sorted(alphas),
                                       'positions within 1..{}'.format(n_T))
            out[i - 1] = value
        return out
    values = list(alphas)
    if len(values) != n_T:
        raise DimensionMismatch(n_T, len(values), 'alphas')
    for k, value in enumerate(values):
        if value is not None:
            out[k] = value
    return out


def _targets(gamma, W1, W2, tau):
    if not gamma > 0:
        raise InvalidParameter('gamma', gamma, 'a positive real')
    if not 0 < tau <= 1:
        raise InvalidParameter('tau', tau, 'a real in (0, 1]')
    if W1 < 0 or W2 < 0:
        raise InvalidParameter('W1, W2', (W1, W2), 'nonnegative norms')
    if not is_grid_multiple(W1, gamma):
        raise InvalidParameter('W1', W1, 'an integer multiple of gamma')
    if not is_grid_multiple(W2 ** 2, gamma ** 2):
        raise InvalidParameter('W2', W2,
                               'a norm with W2^2 a multiple of gamma^2')
    z1 = grid_round(W1, gamma)
    m2 = grid_round(W2 ** 2, gamma ** 2)
    z_max = min(int(math.floor(tau * W2 / gamma + REL_TOL)), z1)
    return z1, m2, z_max


def _position_costs(a, A, B, gamma, z):
    if np.isnan(a):
        return np.zeros(len(z))
    return (a - A * gamma * z + B) ** 2


def recover_weights(alphas, n_T, gamma, W1, W2, tau, A, B,
                    state_cap=RECOVER_STATE_CAP):
    """
    Minimizes sum over known positions of (alpha_i - A w_i + B)^2 over the
    weight vectors w with w_i in gamma * {0, 1, ...}, w_i <= tau W2,
    |w|_1 = W1 and |w|_2 = W2. Among optimal vectors the lexicographically
    smallest is returned.

    :param alphas: known indices by tail position (see alpha_array)
    :param n_T: tail size
    :param gamma: granularity
    :param W1: l1 norm, a multiple of gamma
    :param W2: l2 norm, W2^2 a multiple of gamma^2
    :param tau: regularity bound of the weights
    :param A: slope
    :param B: offset
    :return: RecoverResult, infeasible when no vector meets the constraints
    """
    a = alpha_array(alphas, n_T)
    z1, m2, z_max = _targets(gamma, W1, W2, tau)
    if n_T == 0:
        if z1 == 0 and m2 == 0:
            return RecoverResult((), 0., True, ())
        return RecoverResult.infeasible()

    states = (n_T + 1) * (z1 + 1) * (m2 + 1)
    if states > state_cap:
        raise EnumerationCapExceeded(states, state_cap, 'state_cap')

    z = np.arange(z_max + 1)
    costs = [_position_costs(a[i], A, B, gamma, z) for i in range(n_T)]

    # tables[i][s1, s2]: least cost of positions i..n_T-1 summing to s1, with
    # squares summing to s2
    best = np.full((z1 + 1, m2 + 1), np.inf)
    best[0, 0] = 0.
    tables = [best]
    for i in reversed(range(n_T)):
        new = np.full_like(best, np.inf)
        for zz in z:
            sq = int(zz) ** 2
            if sq > m2:
                break
            shifted = best[:z1 + 1 - zz, :m2 + 1 - sq] + costs[i][zz]
            np.minimum(new[zz:, sq:], shifted, out=new[zz:, sq:])
        best = new
        tables.append(best)
    tables.reverse()

    optimum = tables[0][z1, m2]
    if not np.isfinite(optimum):
        return RecoverResult.infeasible()

    chosen = []
    r1, r2 = z1, m2
    for i in range(n_T):
        target = tables[i][r1, r2]
        tol = 1e-12 * max(1., abs(target))
        for zz in z:
            sq = int(zz) ** 2
            if zz > r1 or sq > r2:
                break
            if costs[i][zz] + tables[i + 1][r1 - zz, r2 - sq] <= target + tol:
                chosen.append(int(zz))
                r1, r2 = r1 - zz, r2 - sq
                break
    return RecoverResult(tuple(gamma * k for k in chosen), float(optimum),
                         True, tuple(chosen))


@lru_cache(maxsize=None)
def _compositions(length, total, largest):
    """
    Integer vectors of the given length with entries in 0..largest summing to
    total, one per row in lexicographic order
    """
    if length == 0:
        return np.zeros((1 if total == 0 else 0, 0), dtype=int)
    blocks = []
    for first in range(min(largest, total) + 1):
        rest = _compositions(length - 1, total - first, largest)
        if len(rest):
            blocks.append(np.column_stack(
                (np.full(len(rest), first, dtype=int), rest)))
    if not blocks:
        return np.zeros((0, length), dtype=int)
    return np.vstack(blocks)


def recover_weights_exhaustive(alphas, n_T, gamma, W1, W2, tau, A, B):
    """
    Same contract as recover_weights, by trying every integer vector.
    Only meant for small instances.
    """
    a = alpha_array(alphas, n_T)
    z1, m2, z_max = _targets(gamma, W1, W2, tau)
    vectors = _compositions(n_T, z1, z_max)
    vectors = vectors[np.sum(vectors ** 2, axis=1) == m2]
    if not len(vectors):
        return RecoverResult.infeasible()

    z = np.arange(z_max + 1)
    costs = np.zeros(len(vectors))
    for i in range(n_T):
        costs += _position_costs(a[i], A, B, gamma, z)[vectors[:, i]]
    optimum = costs.min()
    # rows are sorted, the first near-optimal one is the smallest
    first = int(np.argmax(costs <= optimum + 1e-12 * max(1., optimum)))
    best = tuple(int(k) for k in vectors[first])
    return RecoverResult(tuple(gamma * k for k in best), float(costs[first]),
                         True, best)
