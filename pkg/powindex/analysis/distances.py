# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Distances between functions and between power index vectors

"""

import math

import numpy as np

from ..core.cube import check_cap
from ..core.indices import IndexKind, IndexVector, PartialIndexVector
from ..core.ltf import WeightedLTF
from ..exceptions import DimensionMismatch, InvalidParameter
from ..utils.numerics import CHOW_ENUMERATION_CAP
from .exact import chow_exact, shapley_exact


def _check_same_n(f, g):
    if f.n != g.n:
        raise DimensionMismatch(f.n, g.n)


def _as_vector(f, kind):
    if isinstance(f, WeightedLTF):
        if kind is IndexKind.CHOW:
            return chow_exact(f)
        return shapley_exact(f)
    if isinstance(f, (IndexVector, PartialIndexVector)):
        if f.kind is not kind:
            raise InvalidParameter('kind', f.kind.value,
                                   'a {} vector'.format(kind.value))
        return f
    raise InvalidParameter('f', type(f).__name__,
                           'a WeightedLTF or an index vector')


def _l2_over(f, g, indices):
    return math.sqrt(math.fsum((f[i] - g[i]) ** 2 for i in indices))


def d_hamming(f, g, cap=CHOW_ENUMERATION_CAP):
    """
    Pr_x[f(x) != g(x)] under the uniform distribution, by enumeration

    :param f: WeightedLTF
    :param g: WeightedLTF
    :return:
    """
    _check_same_n(f, g)
    check_cap(f.n, cap)
    disagreements = np.count_nonzero(f.truth_table(cap) != g.truth_table(cap))
    return disagreements / 2. ** f.n


def d_chow(f, g):
    """
    l2 distance between the degree-1 Chow parameters (indices 1..n)

    :param f: WeightedLTF or IndexVector(CHOW)
    :param g: WeightedLTF or IndexVector(CHOW)
    :return:
    """
    f, g = _as_vector(f, IndexKind.CHOW), _as_vector(g, IndexKind.CHOW)
    _check_same_n(f, g)
    return _l2_over(f, g, range(1, f.n + 1))


def d_chow_partial(f, g, indices):
    """
    l2 distance between Chow parameters over S, a subset of {0..n}. Index 0
    compares E[f] and E[g], a term d_chow leaves out: the partial distance is
    at most d_chow when 0 is not in S and at most
    sqrt(d_chow^2 + (E[f] - E[g])^2) otherwise.

    Either side may be a PartialIndexVector covering S.
    """
    f, g = _as_vector(f, IndexKind.CHOW), _as_vector(g, IndexKind.CHOW)
    _check_same_n(f, g)
    return _l2_over(f, g, sorted(indices))


def d_shapley(f, g):
    """ l2 distance between the Shapley index vectors """
    f, g = _as_vector(f, IndexKind.SHAPLEY), _as_vector(g, IndexKind.SHAPLEY)
    _check_same_n(f, g)
    return _l2_over(f, g, range(1, f.n + 1))


def d_shapley_partial(f, g, indices):
    """ l2 distance between Shapley indices over S, a subset of {1..n} """
    f, g = _as_vector(f, IndexKind.SHAPLEY), _as_vector(g, IndexKind.SHAPLEY)
    _check_same_n(f, g)
    if 0 in set(indices):
        raise InvalidParameter('indices', sorted(indices),
                               'Shapley indices within 1..n')
    return _l2_over(f, g, sorted(indices))


def partial_distance(target, vector):
    """
    l2 distance between a PartialIndexVector and a full vector, over the
    indices of the partial vector

    :param target: PartialIndexVector
    :param vector: IndexVector or PartialIndexVector covering target's indices
    :return:
    """
    if target.kind is not vector.kind:
        raise InvalidParameter('kind', vector.kind.value,
                               'a {} vector'.format(target.kind.value))
    _check_same_n(target, vector)
    return _l2_over(target, vector, target.indices)

