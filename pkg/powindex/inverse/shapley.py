# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Reconstruction of a monotone LTF from Shapley indices known on a subset S of
the coordinates.

The tail Shapley indices of an LTF with a regular tail are close to an affine
function A w_i + B of the tail weights. The solver guesses the head weights,
the threshold and the l1/l2 norms of the tail on grids, computes A and B for
each guess and recovers the tail weights with a dynamic program.

"""

import math
import zlib
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import product
from time import time

import numpy as np

from ..analysis.distances import partial_distance
from ..analysis.exact import shapley_exact_dp
from ..analysis.gaussian import alpha_head_norms
from ..analysis.sampling import shapley_estimate_partial
from ..analysis.shapley_dist import QuadratureConfig, integrate
from ..core.indices import IndexKind
from ..core.ltf import WeightedLTF, break_ties, discretize
from ..exceptions import EnumerationCapExceeded, InvalidParameter, \
    QuadratureError
from ..utils.logger import get_bistream_logger
from ..utils.numerics import REL_TOL
from .candidates import STRUCTURED, CandidateLTF, Provenance, \
    ReconstructionResult, check_target, embed_weights, \
    enumerate_junta_candidates, verify_candidates_with
from .config import ShapReconConfig, VerifyMode
from .recover import recover_weights

# Threshold range of the structured grid: |theta| <= (1 - ETA_MIN) |w|_1
ETA_MIN = 0.25


@dataclass(frozen=True)
class AffineConstants:
    """
    f<>(i) ~ a_diamond w_i + b_diamond on a regular tail. gamma_diamond and
    delta_diamond are the same constants for the tail rescaled to unit l2
    norm.
    """
    a_diamond: float
    b_diamond: float
    gamma_diamond: float
    delta_diamond: float
    params: tuple

    def predict(self, w):
        return self.a_diamond * np.asarray(w, dtype=float) + self.b_diamond


@lru_cache(maxsize=2 ** 16)
def _gamma_integral(w_H, l1, theta, delta, epsabs, epsrel, limit):
    cfg = QuadratureConfig(epsabs, epsrel, limit)

    def integrand(p):
        sigma = 2 * math.sqrt(p * (1 - p))
        alpha = alpha_head_norms(theta, w_H, l1, 1., p)
        return 0.5 * sigma * alpha * (1 / p + 1 / (1 - p))

    return integrate(integrand, delta, 1 - delta, cfg)


def affine_constants(w_H, W1, W2, theta, delta, quadrature_cfg=None, n=None):
    """
    Affine constants of the tail Shapley indices of sign(w_H.x_H + w_T.x_T
    - theta), for a tail with |w_T|_1 = W1 and |w_T|_2 = W2.

    With the tail rescaled to unit l2 norm,

        Gamma = 1/2 int_delta^{1-delta} sigma_p alpha(theta, w_H, w_T, p)
                (1/p + 1/(1-p)) dp
        Delta = 2/n - Gamma |w|_1 / n

    and A = Gamma / W2, B = Delta for the original scale.

    :param w_H: head weights
    :param W1: l1 norm of the tail
    :param W2: l2 norm of the tail, > 0
    :param theta: threshold
    :param delta: truncation of the bias integral, in (0, 1/2)
    :param quadrature_cfg: QuadratureConfig
    :param n: number of variables, defaults to round(delta^(-1/2)) which
        matches delta = 1/n^2
    :return: AffineConstants
    """
    if not W2 > 0:
        raise InvalidParameter('W2', W2, 'a positive tail norm')
    if not 0 < delta < 0.5:
        raise InvalidParameter('delta', delta, 'a real in (0, 1/2)')
    if n is None:
        n = int(round(delta ** -0.5))
    cfg = quadrature_cfg or QuadratureConfig()

    # alpha depends on the head through its multiset of weights
    head = tuple(sorted(float(w) / W2 for w in w_H))
    l1 = W1 / W2
    scaled_theta = theta / W2
    gamma = _gamma_integral(head, l1, scaled_theta, delta, cfg.epsabs,
                            cfg.epsrel, cfg.limit)
    delta_ = 2. / n - gamma * (math.fsum(head) + l1) / n
    return AffineConstants(a_diamond=gamma / W2, b_diamond=delta_,
                           gamma_diamond=gamma, delta_diamond=delta_,
                           params=(tuple(sorted(w_H)), W1, W2, theta, delta))


def discretize_for_reconstruction(f, gamma=None, cfg=None):
    """
    The grid approximation of f used by the reconstruction: max weight 1,
    weights and threshold rounded to multiples of gamma

    :param f: WeightedLTF
    :param gamma: granularity, defaults to cfg.gamma
    :param cfg: ShapReconConfig
    :return: WeightedLTF
    """
    if gamma is None:
        gamma = (cfg or ShapReconConfig()).gamma
    return discretize(f, gamma)


def evenly_spaced(lo, hi, count):
    """ At most count integers of [lo, hi], ends included """
    if hi < lo:
        return []
    if hi - lo + 1 <= count:
        return list(range(lo, hi + 1))
    return [int(k) for k in
            np.unique(np.round(np.linspace(lo, hi, count)).astype(int))]


def _exact_score(candidate, target, step, cap):
    return partial_distance(target,
                            shapley_exact_dp(candidate.ltf, step, cap))


def _sampled_score(candidate, target, eps, delta, seed):
    text = repr((candidate.ltf.weights, candidate.ltf.threshold))
    rng = np.random.default_rng([seed, zlib.crc32(text.encode())])
    estimate = shapley_estimate_partial(candidate.ltf, target.n,
                                        target.indices, eps, delta, rng)
    return partial_distance(target, estimate)


class ShapleyReconstruction(object):
    """
    Partial Shapley indices solver.

    Head guesses: for |H| = h and |H ∩ S| = s, H ∩ S holds the s coordinates
    of S with the largest Shapley indices, completed by the lowest-numbered
    coordinates outside S. Each head gets its junta candidates first, then
    the structured candidates over the (w_H, W1, W2, theta) grid.
    """

    def __init__(self, target, n, config=None, parameters_path=None,
                 rng=None, verbose=False):
        self.logger = get_bistream_logger('powindex.ShapleyReconstruction')
        check_target(target, n, IndexKind.SHAPLEY)
        if 0 in target.indices:
            raise InvalidParameter('indices', target.indices,
                                   'Shapley indices within 1..n')
        self.target = target
        self.n = n
        self.verbose = verbose

        if config is None:
            config = self.fill_default_params(parameters_path)
        self.cfg = config
        self.rng = rng if rng is not None else np.random.default_rng()
        self.quadrature = QuadratureConfig(config.quad_epsabs,
                                           config.quad_epsrel,
                                           config.quad_limit)

    def fill_default_params(self, parameters_path=None):
        if parameters_path is None:
            self.logger.info('Using default parameters')
            return ShapReconConfig()
        return ShapReconConfig.from_yaml(parameters_path, self.logger)

    def head_guesses(self):
        """
        :return: list of (h, H, T), H and T sorted tuples of 1-based indices
        """
        known = self.target.as_dict()
        ranked = sorted(known, key=lambda i: (-known[i], i))
        outside = [i for i in range(1, self.n + 1) if i not in known]

        guesses, heads = [], set()
        for h in range(min(self.cfg.head_cap, self.n) + 1):
            for s in range(min(h, len(ranked)) + 1):
                if h - s > len(outside):
                    continue
                head = tuple(sorted(ranked[:s] + outside[:h - s]))
                if head in heads:
                    continue
                heads.add(head)
                tail = tuple(i for i in range(1, self.n + 1) if i not in head)
                guesses.append((h, head, tail))
        return guesses

    def head_weight_grid(self, h):
        """ Head weights on the head_step grid in (0, 1], largest 1 """
        levels = int(round(1. / self.cfg.head_step))
        for v in product(range(1, levels + 1), repeat=h):
            if h and max(v) != levels:
                continue
            yield tuple(k * self.cfg.head_step for k in v)

    def tail_norm_grid(self, tail_size, largest):
        """
        (Z1, m) with W1 = Z1 gamma and W2^2 = m gamma^2, under the
        constraints |w_T|_1^2 / |T| <= |w_T|_2^2 <= tau* |w_T|_2 |w_T|_1

        :param tail_size: |T|
        :param largest: largest tail weight
        :return: list of (Z1, m)
        """
        cfg = self.cfg
        z1_max = int(math.floor(tail_size * largest / cfg.gamma + REL_TOL))
        cells = []
        for z1 in evenly_spaced(1, z1_max, cfg.w1_steps):
            lo = max(int(math.ceil(z1 ** 2 / tail_size - REL_TOL)), z1)
            hi = int(math.floor((cfg.tau_star * z1) ** 2 + REL_TOL))
            for m in evenly_spaced(lo, hi, cfg.w2_steps):
                cells.append((z1, m))
        return cells

    def theta_grid(self, l1):
        """ Multiples of gamma in [-(1 - ETA_MIN) l1, (1 - ETA_MIN) l1] """
        gamma = self.cfg.gamma
        t_max = int(math.floor((1 - ETA_MIN) * l1 / gamma + REL_TOL))
        return [t * gamma for t in evenly_spaced(-t_max, t_max,
                                                 self.cfg.theta_steps)]

    def structured_candidates(self, head, tail):
        cfg = self.cfg
        if not tail:
            return
        known = self.target.as_dict()
        alphas = {k: known[i] for k, i in enumerate(tail, start=1)
                  if i in known}
        delta = cfg.quad_delta(self.n)

        for w_H in self.head_weight_grid(len(head)):
            largest = min(w_H) if w_H else 1.
            for z1, m in self.tail_norm_grid(len(tail), largest):
                # sum z_i^2 and sum z_i have the same parity
                if (m - z1) % 2:
                    continue
                if (len(tail) + 1) * (z1 + 1) * (m + 1) \
                        > cfg.recover_state_cap:
                    continue
                W1, W2 = z1 * cfg.gamma, math.sqrt(m) * cfg.gamma
                for theta in self.theta_grid(math.fsum(w_H) + W1):
                    candidate = self.structured_candidate(head, tail, w_H,
                                                          W1, W2, theta,
                                                          alphas, delta)
                    if candidate is not None:
                        yield candidate

    def structured_candidate(self, head, tail, w_H, W1, W2, theta, alphas,
                             delta):
        """
        One grid cell: affine constants, weight recovery, tie breaking

        :return: CandidateLTF, or None when the cell has no feasible tail
        """
        cfg = self.cfg
        try:
            constants = affine_constants(w_H, W1, W2, theta, delta,
                                         self.quadrature, n=self.n)
        except QuadratureError as e:
            self.logger.warning('Skipping cell w_H={}, W1={}, W2={}, '
                                'theta={}: {}'.format(w_H, W1, W2, theta, e))
            return None
        try:
            # the objective reads (alpha - A w + B)^2
            recovered = recover_weights(alphas, len(tail), cfg.gamma, W1, W2,
                                        cfg.tau_star, constants.a_diamond,
                                        -constants.b_diamond,
                                        state_cap=cfg.recover_state_cap)
        except EnumerationCapExceeded as e:
            self.logger.debug(str(e))
            return None
        if not recovered.feasible:
            return None

        weights = embed_weights(self.n, head, w_H, tail, recovered.weights)
        ltf = break_ties(WeightedLTF(weights, theta), cfg.gamma)
        params = {'w_H': list(w_H), 'theta': theta, 'w1': W1, 'w2': W2,
                  'a': constants.a_diamond, 'b': constants.b_diamond,
                  'cost': recovered.cost}
        return CandidateLTF(ltf, Provenance(STRUCTURED, tuple(head), params))

    def candidates(self):
        """
        The ordered candidate stream

        :return: generator of CandidateLTF
        """
        cfg = self.cfg
        for h, head, tail in self.head_guesses():
            self.logger.debug('head guess |H|={}: {}'.format(h, head))
            yield from enumerate_junta_candidates(
                head, cfg.junta_weight_bound, self.n, seen=set())
            yield from self.structured_candidates(head, tail)

    def verify(self, candidates):
        cfg = self.cfg
        if cfg.verify_mode is VerifyMode.EXACT:
            score = partial(_exact_score, target=self.target, step=cfg.gamma,
                            cap=cfg.cap)
        else:
            score = partial(_sampled_score, target=self.target, eps=cfg.eps,
                            delta=cfg.delta_fail / cfg.max_candidates,
                            seed=int(self.rng.integers(2 ** 32)))
        return verify_candidates_with(candidates, score, cfg.threshold,
                                      threads=cfg.threads,
                                      budget=cfg.max_candidates,
                                      progress=self.verbose,
                                      logger=self.logger)

    def run(self):
        """
        :return: ReconstructionResult
        """
        cfg = self.cfg
        started = time()
        self.logger.info('Computing candidates and verifying them '
                         '(n={}, |S|={}, eps={})'.format(self.n,
                                                         len(self.target),
                                                         cfg.eps))
        verdict = self.verify(self.candidates())
        self.logger.info('Done.')
        if verdict is None:
            raise InvalidParameter('head_cap', cfg.head_cap,
                                   'at least one head guess')

        candidate = verdict.candidate
        result = ReconstructionResult(
            ltf=candidate.ltf,
            certified=verdict.passed,
            achieved_distance=verdict.distance,
            candidates_tried=verdict.tried,
            provenance=candidate.provenance,
            head_size_guess=len(candidate.provenance.head),
            w1=candidate.provenance.params.get('w1'),
            w2=candidate.provenance.params.get('w2'))

        if cfg.verify_mode is VerifyMode.SAMPLED:
            result.estimated_distance = verdict.distance
            if self.n <= cfg.cap:
                result.achieved_distance = _exact_score(candidate, self.target,
                                                        cfg.gamma, cfg.cap)
        result.elapsed = time() - started

        if result.certified:
            self.logger.info('Certified after {} candidates, distance {:.6g}'
                             .format(result.candidates_tried,
                                     result.achieved_distance))
        else:
            self.logger.warning('NOT_CERTIFIED: best distance {:.6g} above '
                                '{:.6g} after {} candidates'
                                .format(verdict.distance, cfg.threshold,
                                        verdict.tried))
        return result


def reconstruct_partial_shapley(target, n, cfg=None, rng=None,
                                verbose=False):
    """
    A monotone LTF whose Shapley indices on S are close to the given ones.
    The indices are assumed to come from an eta-restricted monotone LTF,
    which is not checked.

    :param target: PartialIndexVector(SHAPLEY) on S ⊆ {1..n}
    :param n: number of variables
    :param cfg: ShapReconConfig
    :param rng: numpy Generator
    :return: ReconstructionResult
    """
    return ShapleyReconstruction(target, n, config=cfg, rng=rng,
                                 verbose=verbose).run()
