# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Candidate LTFs of the reconstruction solvers, junta enumeration, and the
ordered verification of a candidate stream.

"""

from dataclasses import dataclass, field
from itertools import islice, product
from multiprocessing.pool import Pool

import numpy as np
from tqdm import tqdm

from ..core.cube import check_cap, cube
from ..core.indices import PartialIndexVector
from ..core.ltf import WeightedLTF, linear_form
from ..exceptions import DimensionMismatch, InvalidParameter
from ..optim.separability import monotone_threshold_tables
from ..utils.numerics import HEAD_ENUMERATION_CAP, JUNTA_DEDUP_CAP, \
    JUNTA_LP_CAP

JUNTA = 'junta'
STRUCTURED = 'structured'

# Candidates sent to a worker at once
CHUNKSIZE = 32


@dataclass(frozen=True)
class Provenance:
    """
    Where a candidate comes from: a junta on the head H, or a structured
    candidate (head weights + regular tail) with its grid parameters
    """
    kind: str
    head: tuple
    params: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        obj = {'kind': self.kind, 'head': list(self.head)}
        obj.update(self.params)
        return obj


@dataclass(frozen=True)
class CandidateLTF:
    ltf: WeightedLTF
    provenance: Provenance

    def to_dict(self):
        return {'ltf': self.ltf.to_dict(),
                'provenance': self.provenance.to_dict()}


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of verify_candidates: the first passing candidate, or the best
    scoring one when none passes
    """
    candidate: CandidateLTF
    distance: float
    passed: bool
    tried: int


@dataclass
class ReconstructionResult:
    ltf: WeightedLTF
    certified: bool
    achieved_distance: float
    candidates_tried: int
    provenance: Provenance = None
    estimated_distance: float = None
    head_size_guess: int = None
    w1: float = None
    w2: float = None
    elapsed: float = None

    def to_dict(self):
        obj = {'ltf': self.ltf.to_dict() if self.ltf is not None else None,
               'certified': self.certified,
               'achieved_distance': self.achieved_distance,
               'candidates_tried': self.candidates_tried}
        if self.provenance is not None:
            obj['provenance'] = self.provenance.to_dict()
        for name in ('estimated_distance', 'head_size_guess', 'w1', 'w2',
                     'elapsed'):
            value = getattr(self, name)
            if value is not None:
                obj[name] = value
        return obj


def check_target(target, n, kind):
    if not isinstance(target, PartialIndexVector):
        raise InvalidParameter('input', type(target).__name__,
                               'a PartialIndexVector')
    if target.kind is not kind:
        raise InvalidParameter('kind', target.kind.value,
                               'a {} vector'.format(kind.value))
    if target.n != n:
        raise DimensionMismatch(n, target.n, 'partial index vector')


def embed_weights(n, head, head_weights, tail=(), tail_weights=()):
    """
    Full weight vector from weights on 1-based index tuples
    """
    weights = np.zeros(n)
    for i, w in zip(head, head_weights):
        weights[i - 1] = w
    for i, w in zip(tail, tail_weights):
        weights[i - 1] = w
    return tuple(weights)


def junta_key(ltf, key_indices):
    """
    Truth table of a junta over the coordinates key_indices, which must
    contain every coordinate with a nonzero weight
    """
    w = np.array([ltf.weights[i - 1] for i in key_indices])
    values = linear_form(w, cube(len(key_indices)), ltf.threshold) >= 0
    return np.packbits(values).tobytes()


def _integer_juntas(head, weight_bound):
    h = len(head)
    rho = cube(h, cap=HEAD_ENUMERATION_CAP)
    for z in product(range(weight_bound + 1), repeat=h):
        sums = np.unique(linear_form(np.array(z, dtype=float), rho))
        # one threshold per cut of the attained values, plus the empty cut
        for theta in list(sums) + [sums[-1] + 1]:
            yield z, int(theta)


def _lp_juntas(head):
    for _, z, theta in monotone_threshold_tables(len(head)):
        yield z, theta


def enumerate_junta_candidates(head, weight_bound, n, method='weights',
                               key_indices=None, seen=None,
                               cap=HEAD_ENUMERATION_CAP):
    """
    Monotone junta LTFs on the coordinates in head: nonnegative integer
    weights up to weight_bound and every integer threshold cut, in
    lexicographic order of the weights then increasing threshold.

    With method='lp' every monotone truth table on the head is tested for
    separability instead, which does not depend on weight_bound
    (|head| <= JUNTA_LP_CAP).

    Candidates are de-duplicated by their truth table over key_indices
    (default: head) when it has at most JUNTA_DEDUP_CAP coordinates. Passing
    the same `seen` set to successive calls skips functions already produced.

    :param head: tuple of 1-based indices
    :param weight_bound:
    :param n: number of variables of the candidates
    :param method: 'weights' or 'lp'
    :param key_indices: superset of head used for de-duplication
    :param seen: set of truth-table keys, updated in place
    :return: generator of CandidateLTF
    """
    head = tuple(head)
    check_cap(len(head), cap, 'head_cap')
    if method == 'weights':
        juntas = _integer_juntas(head, weight_bound)
    elif method == 'lp':
        check_cap(len(head), JUNTA_LP_CAP, 'method')
        juntas = _lp_juntas(head)
    else:
        raise InvalidParameter('method', method, "'weights' or 'lp'")

    key_indices = tuple(key_indices) if key_indices is not None else head
    dedup = len(key_indices) <= JUNTA_DEDUP_CAP
    if seen is None:
        seen = set()

    for z, theta in juntas:
        ltf = WeightedLTF(embed_weights(n, head, z), theta)
        if dedup:
            key = junta_key(ltf, key_indices)
            if key in seen:
                continue
            seen.add(key)
        yield CandidateLTF(ltf, Provenance(JUNTA, head,
                                           {'weights': list(z),
                                            'theta': theta}))


def verify_candidates_with(candidates, score, threshold, threads=1,
                           budget=None, progress=False, logger=None):
    """
    Scores candidates in stream order and stops at the first one whose score
    is within threshold. Worker pools keep the stream order, so the returned
    candidate does not depend on the number of threads.

    :param candidates: iterable of CandidateLTF
    :param score: picklable callable CandidateLTF -> distance
    :param threshold: acceptance distance
    :param threads: number of worker processes
    :param budget: largest number of candidates scored
    :param progress: show a tqdm bar
    :param logger:
    :return: Verdict, or None for an empty stream
    """
    stream = islice(candidates, budget) if budget else iter(candidates)
    best, best_distance, tried = None, np.inf, 0

    pool = Pool(processes=threads) if threads > 1 else None
    try:
        if pool is None:
            scored = ((c, score(c)) for c in stream)
        else:
            # chunks are scored in parallel and read back in stream order
            def paired(it):
                for chunk in iter(lambda: list(islice(it, CHUNKSIZE
                                                      * threads)), []):
                    for c, d in zip(chunk, pool.map(score, chunk,
                                                    chunksize=CHUNKSIZE)):
                        yield c, d
            scored = paired(stream)

        for candidate, distance in tqdm(scored, total=budget,
                                        disable=not progress,
                                        desc='verifying'):
            tried += 1
            if distance < best_distance:
                best, best_distance = candidate, distance
            if distance <= threshold + 1e-12:
                if logger is not None:
                    logger.debug('candidate {} passes at {:.6g}'
                                 .format(tried, distance))
                return Verdict(candidate, distance, True, tried)
    finally:
        if pool is not None:
            pool.terminate()

    if best is None:
        return None
    return Verdict(best, best_distance, False, tried)
