# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Reconstruction of an LTF from Chow parameters known on a subset S of the
coordinates: head guessing, candidate enumeration (junta LTFs on the head and
head + regular tail LTFs), and first-passing-candidate verification.

"""

import math
import zlib
from functools import partial
from itertools import product
from time import time

import numpy as np

from ..analysis.distances import partial_distance
from ..analysis.exact import chow_exact
from ..analysis.sampling import chow_estimate
from ..core.indices import IndexKind
from ..core.ltf import WeightedLTF
from ..exceptions import DimensionMismatch, InvalidParameter, \
    RadicandNegative
from ..utils.logger import get_bistream_logger
from ..utils.numerics import CHOW_ENUMERATION_CAP, REL_TOL
from .candidates import STRUCTURED, CandidateLTF, Provenance, \
    ReconstructionResult, check_target, embed_weights, \
    enumerate_junta_candidates, verify_candidates_with
from .config import ChowReconConfig, VerifyMode

RADICAND_TOL = 1e-12


def split_head_tail(target, tau):
    """
    Splits the degree-1 coordinates of S at tau^2: |f^(i)| >= tau^2 goes to
    the head. Index 0 is in neither part.

    :param target: PartialIndexVector(CHOW)
    :param tau: regularity parameter
    :return: (H ∩ S, T ∩ S) as sorted tuples of 1-based indices
    """
    if not 0 < tau <= 1:
        raise InvalidParameter('tau', tau, 'a real in (0, 1]')
    cut = tau ** 2 * (1 - REL_TOL)
    head, tail = [], []
    for i, value in target.entries:
        if i == 0:
            continue
        (head if abs(value) >= cut else tail).append(i)
    return tuple(head), tuple(tail)


def structured_tail(target, tail, gamma_prime):
    """
    Tail weights of a structured candidate: f^(i)/gamma' on T ∩ S and
    r/gamma' on the rest of T, with r chosen so that the tail has unit l2
    norm. Negative coefficients of a monotone target are clamped to 0.

    :param target: PartialIndexVector(CHOW)
    :param tail: 1-based indices of T
    :param gamma_prime: guessed l2 norm of the tail Chow parameters
    :return: (weights on T, r), r is None when T ⊆ S
    """
    if not gamma_prime > 0:
        raise InvalidParameter('gamma_prime', gamma_prime, 'a positive real')
    known = target.as_dict()
    in_s = [i for i in tail if i in known]
    outside = [i for i in tail if i not in known]
    known_sq = math.fsum(max(known[i], 0.) ** 2 for i in in_s)

    r = None
    if outside:
        radicand = (gamma_prime ** 2 - known_sq) / len(outside)
        if radicand < 0:
            if radicand < -RADICAND_TOL * max(1., gamma_prime ** 2):
                raise RadicandNegative(gamma_prime, radicand)
            radicand = 0.
        r = math.sqrt(radicand)

    weights = [max(known[i], 0.) / gamma_prime if i in known
               else r / gamma_prime for i in tail]
    return tuple(weights), r


def build_structured_candidate(target, head, tail, gamma_prime, v_H,
                               theta_prime, grid=None):
    """
    The LTF  sum_H v_i x_i + (1/gamma') (sum_{T∩S} f^(i) x_i
    + sum_{T\\S} r x_i) - theta'

    :param target: PartialIndexVector(CHOW)
    :param head: 1-based indices of H
    :param tail: 1-based indices of T
    :param gamma_prime:
    :param v_H: head weights, aligned with head
    :param theta_prime: threshold
    :param grid: grid coordinates recorded in the provenance
    :return: CandidateLTF
    """
    if len(v_H) != len(head):
        raise DimensionMismatch(len(head), len(v_H), 'head weights')
    tail_weights, r = structured_tail(target, tail, gamma_prime)
    weights = embed_weights(target.n, head, v_H, tail, tail_weights)
    params = {'gamma_prime': gamma_prime, 'r': r, 'v_H': list(v_H),
              'theta_prime': theta_prime}
    if grid is not None:
        params['grid'] = list(grid)
    return CandidateLTF(WeightedLTF(weights, theta_prime),
                        Provenance(STRUCTURED, tuple(head), params))


def gamma_prime_grid(step):
    """ Integer multiples of step in (0, 1], and 1 """
    count = int(math.floor(1. / step + REL_TOL))
    grid = [k * step for k in range(1, count + 1)]
    if not grid or abs(grid[-1] - 1) > REL_TOL:
        grid.append(1.)
    return grid


def _exact_score(candidate, target, cap):
    return partial_distance(target, chow_exact(candidate.ltf, cap))


def _candidate_seed(candidate, seed):
    text = repr((candidate.ltf.weights, candidate.ltf.threshold))
    return np.random.default_rng([seed, zlib.crc32(text.encode())])


def _sampled_score(candidate, target, eps, delta, seed):
    rng = _candidate_seed(candidate, seed)
    estimate = chow_estimate(candidate.ltf, target.n, target.indices, eps,
                             delta, rng)
    return partial_distance(target, estimate)


def verify_candidates(candidates, target, eps, delta, mode=VerifyMode.EXACT,
                      rng=None, acceptance=2., cap=CHOW_ENUMERATION_CAP,
                      threads=1, budget=None, progress=False, logger=None):
    """
    Returns the first candidate whose Chow parameters on S are within
    acceptance * eps of the target.

    EXACT mode computes the Chow parameters by enumeration. SAMPLED mode
    estimates each of them within eps/sqrt(|S|), with confidence delta/budget
    per candidate; every candidate gets its own generator, derived from one
    draw of rng and the candidate itself.

    :param candidates: iterable of CandidateLTF
    :param target: PartialIndexVector(CHOW)
    :param eps:
    :param delta:
    :param mode: VerifyMode
    :param rng: numpy Generator, needed in SAMPLED mode
    :param acceptance: the threshold is acceptance * eps
    :return: Verdict
    """
    mode = VerifyMode(getattr(mode, 'value', mode))
    if mode is VerifyMode.EXACT:
        score = partial(_exact_score, target=target, cap=cap)
    else:
        if rng is None:
            raise InvalidParameter('rng', rng,
                                   'a numpy Generator for sampled mode')
        union = max(budget or 1, 1)
        score = partial(_sampled_score, target=target, eps=eps,
                        delta=delta / union,
                        seed=int(rng.integers(2 ** 32)))
    return verify_candidates_with(candidates, score, acceptance * eps,
                                  threads=threads, budget=budget,
                                  progress=progress, logger=logger)


class ChowReconstruction(object):
    """
    Partial Chow parameters solver.

    For every guessed head size h, the head H is made of the coordinates of S
    with large Chow parameters, padded with the lowest-numbered coordinates
    outside S. The candidates for H are the junta LTFs on H, then the
    structured LTFs over the (gamma', v_H, theta') grid, in lexicographic
    order of their grid coordinates.
    """

    def __init__(self, target, n, config=None, parameters_path=None,
                 rng=None, verbose=False):
        self.logger = get_bistream_logger('powindex.ChowReconstruction')
        check_target(target, n, IndexKind.CHOW)
        self.target = target
        self.n = n
        self.verbose = verbose

        if config is None:
            config = self.fill_default_params(parameters_path)
        self.cfg = config
        self.rng = rng if rng is not None else np.random.default_rng()

    def fill_default_params(self, parameters_path=None):
        if parameters_path is None:
            self.logger.info('Using default parameters')
            return ChowReconConfig()
        return ChowReconConfig.from_yaml(parameters_path, self.logger)

    def head_guesses(self):
        """
        :return: list of (h, H, T), H and T sorted tuples of 1-based indices
        """
        cfg = self.cfg
        large, _ = split_head_tail(self.target, cfg.tau)
        known = self.target.as_dict()
        ranked = sorted(large, key=lambda i: (-abs(known[i]), i))
        outside = [i for i in range(1, self.n + 1) if i not in known]

        if len(ranked) <= cfg.head_cap:
            sizes = range(len(ranked), cfg.head_cap + 1)
        else:
            self.logger.warning('{} coordinates of S are above tau^2={:.4g}, '
                                'more than head_cap={}: the heads keep the '
                                'largest ones'.format(len(ranked),
                                                      cfg.tau ** 2,
                                                      cfg.head_cap))
            sizes = range(0, cfg.head_cap + 1)

        guesses = []
        for h in sizes:
            if h > self.n:
                break
            part = ranked[:h]
            missing = h - len(part)
            if missing > len(outside):
                break
            head = tuple(sorted(part + outside[:missing]))
            tail = tuple(i for i in range(1, self.n + 1) if i not in head)
            guesses.append((h, head, tail))
        return guesses

    def structured_candidates(self, head, tail):
        cfg = self.cfg
        if not tail:
            return
        known = self.target.as_dict()
        if all(i in known for i in tail):
            gamma = math.sqrt(math.fsum(max(known[i], 0.) ** 2
                                        for i in tail))
            if gamma == 0:
                return
            gammas = [gamma]
        else:
            floor_norm = math.sqrt(math.fsum(max(known[i], 0.) ** 2
                                             for i in tail if i in known))
            gammas = [g for g in gamma_prime_grid(cfg.gamma_prime_step)
                      if g >= floor_norm * (1 - REL_TOL)]

        step = cfg.head_grid_step(len(head))
        levels = int(math.floor(cfg.head_weight_bound / step + REL_TOL))
        for k, gamma_prime in enumerate(gammas):
            try:
                structured_tail(self.target, tail, gamma_prime)
            except RadicandNegative as e:
                self.logger.debug(str(e))
                continue
            for v in product(range(levels + 1), repeat=len(head)):
                v_H = [c * step for c in v]
                t_max = int(math.floor((sum(v_H) + cfg.theta_slack) / step
                                       + REL_TOL))
                for t in range(-t_max, t_max + 1):
                    yield build_structured_candidate(
                        self.target, head, tail, gamma_prime, v_H, t * step,
                        grid=(k,) + v + (t,))

    def candidates(self):
        """
        The ordered candidate stream

        :return: generator of CandidateLTF
        """
        cfg = self.cfg
        guesses = self.head_guesses()
        if not guesses:
            return
        # heads are nested, the last one holds every junta coordinate
        key_indices = guesses[-1][1]
        seen = set()
        for h, head, tail in guesses:
            self.logger.debug('head guess |H|={}: {}'.format(h, head))
            yield from enumerate_junta_candidates(
                head, cfg.junta_weight_bound, self.n,
                method=cfg.junta_method, key_indices=key_indices, seen=seen)
            yield from self.structured_candidates(head, tail)

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
        verdict = verify_candidates(self.candidates(), self.target, cfg.eps,
                                    cfg.delta, mode=cfg.verify_mode,
                                    rng=self.rng, acceptance=cfg.acceptance,
                                    cap=cfg.cap, threads=cfg.threads,
                                    budget=cfg.max_candidates,
                                    progress=self.verbose,
                                    logger=self.logger)
        self.logger.info('Done.')
        if verdict is None:
            raise InvalidParameter('head_cap', cfg.head_cap,
                                   'at least one head guess')

        result = ReconstructionResult(
            ltf=verdict.candidate.ltf,
            certified=verdict.passed,
            achieved_distance=verdict.distance,
            candidates_tried=verdict.tried,
            provenance=verdict.candidate.provenance,
            head_size_guess=len(verdict.candidate.provenance.head))

        if cfg.verify_mode is VerifyMode.SAMPLED:
            result.estimated_distance = verdict.distance
            if self.n <= cfg.cap:
                result.achieved_distance = _exact_score(verdict.candidate,
                                                        self.target, cfg.cap)
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


def reconstruct_partial_chow(target, n, cfg=None, rng=None, verbose=False):
    """
    An LTF whose Chow parameters on S are close to the given ones

    :param target: PartialIndexVector(CHOW) on S ⊆ {0..n}
    :param n: number of variables
    :param cfg: ChowReconConfig
    :param rng: numpy Generator
    :return: ReconstructionResult; result.ltf is the LTF and
        result.certified tells whether it passed the acceptance threshold
    """
    return ChowReconstruction(target, n, config=cfg, rng=rng,
                              verbose=verbose).run()
