# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Linear threshold functions f(x) = sign(w.x - theta) over {-1,1}^n, their 0/1
weighted voting game view, and regularity / critical index analysis.

sign(0) = +1 everywhere in the package.

"""

import logging
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .cube import check_cap, iter_cube_blocks
from ..exceptions import DimensionMismatch, InvalidParameter, UnsortedWeights
from ..utils.numerics import CHOW_ENUMERATION_CAP, REL_TOL, grid_round, \
    is_grid_multiple

logger = logging.getLogger(__name__)


class _Infinite(object):
    """
    Critical index of weight vectors whose every tail is irregular
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Infinite, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INFINITE'

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def linear_form(weights, X, theta=0.):
    """
    w.x - theta for every row of X, accumulated column by column so that one
    row and a full table give bitwise identical values

    :param weights: 1D array
    :param X: (N, n) array of +/-1
    :param theta:
    :return: 1D float array
    """
    X = np.atleast_2d(X)
    values = np.zeros(X.shape[0])
    for j, w_j in enumerate(weights):
        if w_j != 0:
            values += w_j * X[:, j]
    return values - theta


@dataclass(frozen=True)
class WeightedLTF:
    weights: tuple
    threshold: float
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        if len(weights) < 1:
            raise InvalidParameter('weights', weights, 'at least one weight')
        if not all(math.isfinite(w) and w >= 0 for w in weights):
            raise InvalidParameter('weights', weights,
                                   'finite nonnegative values')
        if not math.isfinite(self.threshold):
            raise InvalidParameter('threshold', self.threshold,
                                   'a finite real')
        array = np.array(weights)
        array.setflags(write=False)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'threshold', float(self.threshold))
        object.__setattr__(self, '_array', array)

    @property
    def n(self):
        return len(self.weights)

    @property
    def w(self):
        return self._array

    @property
    def l1(self):
        return float(np.sum(self._array))

    @property
    def l2(self):
        return float(np.linalg.norm(self._array))

    def values(self, X):
        """
        Evaluates the LTF on every row of X

        :param X: (N, n) array of +/-1
        :return: (N,) int8 array of +/-1
        """
        X = np.atleast_2d(X)
        if X.shape[1] != self.n:
            raise DimensionMismatch(self.n, X.shape[1])
        return np.where(linear_form(self._array, X, self.threshold) >= 0,
                        1, -1).astype(np.int8)

    def __call__(self, X):
        X = np.asarray(X)
        if X.ndim == 1:
            return int(self.values(X[None, :])[0])
        return self.values(X)

    def truth_table(self, cap=CHOW_ENUMERATION_CAP):
        """
        Values on the whole hypercube, in row order (see powindex.core.cube)

        :param cap:
        :return: (2^n,) int8 array of +/-1
        """
        check_cap(self.n, cap)
        return np.concatenate([self.values(X)
                               for _, X in iter_cube_blocks(self.n)])

    def at_ones(self):
        """ f(1^n) """
        return 1 if self.l1 - self.threshold >= 0 else -1

    def at_minus_ones(self):
        """ f((-1)^n) """
        return 1 if -self.l1 - self.threshold >= 0 else -1

    def with_threshold(self, threshold):
        return WeightedLTF(self.weights, threshold)

    def scaled(self, factor):
        """ Same function, weights and threshold multiplied by factor > 0 """
        if factor <= 0:
            raise InvalidParameter('factor', factor, 'a positive real')
        return WeightedLTF(tuple(w * factor for w in self.weights),
                           self.threshold * factor)

    def to_dict(self):
        return {'weights': list(self.weights),
                'threshold': self.threshold,
                'encoding': 'pm1'}

    def __str__(self):
        return 'sign({} . x - {})'.format(list(self.weights), self.threshold)


@dataclass(frozen=True)
class GameSpec:
    raw_weights: tuple
    quota: float

    def __post_init__(self):
        raw_weights = tuple(float(v) for v in self.raw_weights)
        if not raw_weights or not all(math.isfinite(v) and v >= 0
                                      for v in raw_weights):
            raise InvalidParameter('raw_weights', raw_weights,
                                   'a nonempty sequence of nonnegative reals')
        if not 0 < self.quota <= sum(raw_weights):
            raise InvalidParameter('quota', self.quota,
                                   '0 < q <= sum of the weights')
        object.__setattr__(self, 'raw_weights', raw_weights)
        object.__setattr__(self, 'quota', float(self.quota))

    @property
    def n(self):
        return len(self.raw_weights)

    def passes(self, coalition):
        """
        :param coalition: iterable of 1-based player indices
        :return: True iff the coalition weight meets the quota
        """
        return sum(self.raw_weights[i - 1] for i in coalition) >= self.quota

    def to_dict(self):
        return {'weights': list(self.raw_weights), 'quota': self.quota}


@dataclass(frozen=True)
class CriticalIndexReport:
    tau: float
    critical_index: object
    tail_norms: tuple

    @property
    def is_infinite(self):
        return self.critical_index is INFINITE

    @property
    def head_size(self):
        """ Number of weights before the regular tail, None if INFINITE """
        if self.is_infinite:
            return None
        return self.critical_index - 1


def evaluate(f, x):
    """
    sign(w.x - theta) with sign(0) = +1

    :param f: WeightedLTF
    :param x: sequence of +/-1 of length n
    :return: +1 or -1
    """
    x = np.asarray(x)
    if x.ndim != 1 or len(x) != f.n:
        raise DimensionMismatch(f.n, x.shape[-1] if x.ndim else 0)
    return f(x)


def from_game(g):
    """
    LTF of a weighted voting game: coalition S passes (sum of its weights
    meets the quota) iff f is +1 on the +/-1 indicator of S

    :param g: GameSpec
    :return: WeightedLTF with theta = 2q - sum(v)
    """
    return WeightedLTF(g.raw_weights, 2 * g.quota - sum(g.raw_weights))


def to_game(f):
    """
    Inverse of from_game. The quota is (theta + |w|_1) / 2, which must lie in
    (0, |w|_1], i.e. f is neither constant +1 by threshold nor unreachable.

    :param f: WeightedLTF
    :return: GameSpec
    """
    return GameSpec(f.weights, (f.threshold + f.l1) / 2)


def sort_by_magnitude(f):
    """
    Stable sort of the weights, largest first

    :param f: WeightedLTF
    :return: (sorted WeightedLTF, permutation) where permutation[k-1] is the
        1-based original index of the new k-th coordinate
    """
    order = np.argsort(-f.w, kind='stable')
    permutation = tuple(int(i) + 1 for i in order)
    sorted_f = WeightedLTF(tuple(f.weights[i] for i in order), f.threshold)
    return sorted_f, permutation


def permute_inputs(X, permutation):
    """
    Reorders the columns of X like sort_by_magnitude reorders weights, so
    that sorted_f(permute_inputs(X, perm)) == f(X)

    :param X: (N, n) array
    :param permutation: 1-based, as returned by sort_by_magnitude
    :return:
    """
    return np.asarray(X)[..., [i - 1 for i in permutation]]


def _as_weight_array(w):
    w = np.asarray(getattr(w, 'w', w), dtype=float)
    if w.ndim != 1:
        raise InvalidParameter('w', w, 'a one-dimensional weight sequence')
    return w


def regularity(w):
    """
    |w|_inf / |w|_2

    :param w: weight sequence or WeightedLTF
    :return: a real in (0, 1]
    """
    w = _as_weight_array(w)
    norm = np.linalg.norm(w)
    if norm == 0:
        raise InvalidParameter('w', w, 'a nonzero weight vector')
    return float(np.max(np.abs(w)) / norm)


def tail_norms(w):
    """
    sigma_k = sqrt(sum_{i >= k} w_i^2) for k = 1..n

    :param w:
    :return: 1D array, nonincreasing
    """
    w = _as_weight_array(w)
    return np.sqrt(np.cumsum((w ** 2)[::-1])[::-1])


def critical_index(w, tau):
    """
    The tau-critical index: the smallest i such that |w_i| <= tau * sigma_i,
    INFINITE when no index qualifies.

    :param w: weights sorted by nonincreasing magnitude
    :param tau: in (0, 1]
    :return: CriticalIndexReport
    """
    w = _as_weight_array(w)
    if not 0 < tau <= 1:
        raise InvalidParameter('tau', tau, 'a real in (0, 1]')
    magnitudes = np.abs(w)
    unsorted = np.nonzero(magnitudes[1:] > magnitudes[:-1])[0]
    if len(unsorted):
        raise UnsortedWeights(int(unsorted[0]) + 2)

    sigma = tail_norms(w)
    index = INFINITE
    for i, (w_i, sigma_i) in enumerate(zip(magnitudes, sigma)):
        if w_i <= tau * sigma_i * (1 + REL_TOL):
            index = i + 1
            break
    return CriticalIndexReport(tau=float(tau),
                               critical_index=index,
                               tail_norms=tuple(float(s) for s in sigma))


def is_eta_restricted(f, eta):
    """
    True iff |theta| <= (1 - eta) |w|_1

    :param f: WeightedLTF
    :param eta: in (0, 1]
    :return:
    """
    if not 0 < eta <= 1:
        raise InvalidParameter('eta', eta, 'a real in (0, 1]')
    bound = (1 - eta) * f.l1
    return abs(f.threshold) <= bound + REL_TOL * max(1., bound)


def normalize_max_weight(f):
    """
    Rescales f so that its largest weight is 1. Positive rescaling leaves the
    function unchanged.

    :param f: WeightedLTF
    :return:
    """
    top = max(f.weights)
    if top == 0:
        raise InvalidParameter('weights', f.weights, 'a nonzero weight vector')
    if top == 1:
        return f
    return f.scaled(1. / top)


def discretize(f, gamma, eta=None):
    """
    Rounds every weight and the threshold to the nearest integer multiple of
    gamma, after rescaling f to unit max weight.

    :param f: WeightedLTF
    :param gamma: granularity > 0
    :param eta: if given, the eta-restriction is checked again on the output
        and a loss is reported
    :return: WeightedLTF on the gamma grid
    """
    if not gamma > 0:
        raise InvalidParameter('gamma', gamma, 'a positive real')
    f = normalize_max_weight(f)
    if gamma > 1:
        warnings.warn('gamma={} is larger than all weights: the discretized '
                      'weights collapse to 0 or gamma'.format(gamma))

    weights = tuple(grid_round(w, gamma) * gamma for w in f.weights)
    threshold = grid_round(f.threshold, gamma) * gamma
    g = WeightedLTF(weights, threshold)

    if max(weights) < 0.5:
        warnings.warn('max rounded weight {} is below 1/2'
                      .format(max(weights)))
    if eta is not None and is_eta_restricted(f, eta) \
            and not is_eta_restricted(g, eta):
        logger.warning('discretize with gamma={} lost the {}-restriction '
                       '(|theta|={}, |w|_1={})'.format(gamma, eta,
                                                       abs(threshold), g.l1))
    return g


def integer_representation(f, step):
    """
    Integer weights z and quota Q with f(S) = +1 iff sum_{i in S} z_i >= Q,
    for f with weights on the step grid

    :param f: WeightedLTF
    :param step: grid step
    :return: (z, Q) with z an int64 array
    """
    if not all(is_grid_multiple(w, step) for w in f.weights):
        raise InvalidParameter('step', step,
                               'a grid step dividing every weight')
    z = np.array([grid_round(w, step) for w in f.weights], dtype=np.int64)
    half = (f.threshold / step + int(z.sum())) / 2
    quota = int(math.ceil(half - REL_TOL * max(1., abs(half))))
    return z, quota


def _subset_sums(z):
    reachable = 1
    for z_i in z:
        reachable |= reachable << int(z_i)
    return reachable


def attains_threshold(f, step=None, cap=CHOW_ENUMERATION_CAP):
    """
    True if some input x has w.x == theta exactly

    :param f:
    :param step: grid step of the weights, enables the subset-sum test
    :return:
    """
    if step is not None and all(is_grid_multiple(w, step) for w in f.weights):
        z = [grid_round(w, step) for w in f.weights]
        doubled = f.threshold / step + sum(z)
        if not is_grid_multiple(doubled, 2.):
            return False
        target = grid_round(doubled, 2.)
        if not 0 <= target <= sum(z):
            return False
        return bool((_subset_sums(z) >> target) & 1)
    check_cap(f.n, cap)
    tol = REL_TOL * max(1., f.l1)
    for _, X in iter_cube_blocks(f.n):
        if np.any(np.abs(linear_form(f.w, X, f.threshold)) <= tol):
            return True
    return False


def break_ties(f, step):
    """
    Moves theta down by step/2 when some input sits exactly on the threshold.
    Tied inputs keep their value +1 and the evaluation no longer depends on
    floating point rounding at the tie.

    :param f: WeightedLTF
    :param step: smallest positive grid step of the weights and threshold
    :return:
    """
    if attains_threshold(f, step):
        return f.with_threshold(f.threshold - step / 2)
    return f


def ltf_from_dict(obj):
    """
    Builds a WeightedLTF from its game JSON dictionary: either
    {"weights", "quota"} or {"weights", "threshold", "encoding": "pm1"}

    :param obj:
    :return:
    """
    if 'quota' in obj:
        return from_game(GameSpec(obj['weights'], obj['quota']))
    if 'threshold' in obj:
        encoding = obj.get('encoding', 'pm1')
        if encoding != 'pm1':
            raise InvalidParameter('encoding', encoding, '"pm1"')
        return WeightedLTF(obj['weights'], obj['threshold'])
    raise InvalidParameter('game', sorted(obj),
                           'a "quota" or a "threshold" key')
