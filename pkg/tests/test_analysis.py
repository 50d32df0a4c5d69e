# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Tests of the exact power indices and of the distances

"""

import math

import numpy as np
import pytest

from settings import constant_plus, dict3, eu_game, even_split, \
    exact_precision, maj3, new_rng

from powindex.analysis.distances import d_chow, d_chow_partial, d_hamming, \
    d_shapley, d_shapley_partial, partial_distance
from powindex.analysis.exact import bias_moments, chow_exact, \
    chow_pbiased_exact, coordinate_correlation_pbiased, shapley_exact, \
    shapley_exact_dp, slice_statistics
from powindex.core.generators import random_monotone_ltf
from powindex.core.indices import IndexKind, IndexVector, PartialIndexVector
from powindex.core.ltf import WeightedLTF
from powindex.exceptions import DimensionMismatch, EnumerationCapExceeded, \
    InvalidParameter


########
# CHOW #
########

def test_chow_majority():
    chow = chow_exact(maj3)
    assert chow[0] == 0.
    assert chow.values == (0.5, 0.5, 0.5)


def test_chow_dictator():
    chow = chow_exact(dict3)
    assert chow[0] == 0.
    assert chow.values == (1., 0., 0.)


def test_chow_constant():
    chow = chow_exact(constant_plus(4))
    assert chow[0] == 1.
    assert chow.values == (0.,) * 4


def test_chow_cap():
    with pytest.raises(EnumerationCapExceeded):
        chow_exact(maj3, cap=2)


def test_parseval():
    rng = new_rng(10)
    for _ in range(100):
        chow = chow_exact(random_monotone_ltf(int(rng.integers(1, 11)), rng))
        assert np.sum(chow.as_array() ** 2) <= 1 - chow[0] ** 2 + 1e-12


###################
# P-BIASED CHOW   #
###################

def test_half_biased_is_uniform():
    rng = new_rng(11)
    for _ in range(20):
        f = random_monotone_ltf(int(rng.integers(1, 11)), rng)
        biased = chow_pbiased_exact(f, 0.5).as_array()
        assert np.max(np.abs(biased - chow_exact(f).as_array())) \
            <= exact_precision


@pytest.mark.parametrize('p', [0.1, 0.3, 0.75])
def test_pbiased_dictator(p):
    _, sigma = bias_moments(p)
    assert math.isclose(chow_pbiased_exact(dict3, p)[1], sigma)
    # E[x_1 x_1] = 1 whatever the bias
    assert math.isclose(coordinate_correlation_pbiased(dict3, p)[1], 1.)


@pytest.mark.parametrize('p', [0.2, 0.6])
def test_pbiased_constant(p):
    mu, _ = bias_moments(p)
    f = constant_plus(3)
    assert np.allclose(chow_pbiased_exact(f, p).as_array(), 0.,
                       atol=exact_precision)
    assert np.allclose(coordinate_correlation_pbiased(f, p).as_array(), mu)


def test_correlation_identity():
    rng = new_rng(12)
    for _ in range(50):
        f = random_monotone_ltf(int(rng.integers(1, 11)), rng)
        p = float(rng.uniform(0.05, 0.95))
        mu, sigma = bias_moments(p)
        chow = chow_pbiased_exact(f, p)
        corr = coordinate_correlation_pbiased(f, p)
        expected = sigma * chow.as_array() + mu * chow[0]
        assert np.max(np.abs(corr.as_array() - expected)) <= exact_precision


def test_invalid_bias():
    with pytest.raises(InvalidParameter):
        chow_pbiased_exact(maj3, 1.)


###########
# SHAPLEY #
###########

def test_even_split():
    values = shapley_exact(even_split).as_array()
    assert np.max(np.abs(values - 2. / 3)) <= exact_precision


def test_luxembourg_is_null():
    assert shapley_exact(eu_game)[6] == 0


def test_shapley_dictator():
    assert np.allclose(shapley_exact(dict3).as_array(), (2., 0., 0.))


def test_shapley_sum_law():
    rng = new_rng(13)
    for _ in range(1000):
        f = random_monotone_ltf(int(rng.integers(1, 13)), rng)
        total = shapley_exact(f).total()
        assert abs(total - (f.at_ones() - f.at_minus_ones())) <= 1e-10


def test_shapley_monotonicity():
    rng = new_rng(14)
    for _ in range(1000):
        f = random_monotone_ltf(int(rng.integers(2, 13)), rng)
        values = shapley_exact(f).as_array()
        for i in range(f.n):
            for j in range(f.n):
                if f.weights[i] >= f.weights[j]:
                    assert values[i] >= values[j] - 1e-12


def test_shapley_dp_matches_enumeration():
    rng = new_rng(15)
    for _ in range(50):
        f = random_monotone_ltf(int(rng.integers(1, 11)), rng, step=0.125)
        dp = shapley_exact_dp(f, 0.125).as_array()
        enumerated = shapley_exact(f).as_array()
        assert np.max(np.abs(dp - enumerated)) <= 1e-10

    dp = shapley_exact_dp(eu_game, 1.)
    assert dp[6] == 0
    assert np.allclose(shapley_exact_dp(even_split, 1.).as_array(), 2. / 3)


def test_shapley_dp_large_n():
    # 40 equal players: each is pivotal for the same fraction
    f = WeightedLTF((1.,) * 40, 0.)
    values = shapley_exact_dp(f, 1.).as_array()
    assert np.allclose(values, 2. / 40)


def test_slice_statistics_paths_agree():
    rng = new_rng(17)
    for _ in range(20):
        f = random_monotone_ltf(int(rng.integers(2, 9)), rng, step=0.25)
        dp = slice_statistics(f, step=0.25)
        enumerated = slice_statistics(f)
        assert np.allclose(dp.passing, enumerated.passing)
        assert np.allclose(dp.passing_with, enumerated.passing_with)
        assert np.allclose(dp.pbiased_correlations(0.3),
                           coordinate_correlation_pbiased(f, 0.3)
                           .as_array())


#############
# DISTANCES #
#############

def test_majority_against_dictator():
    assert d_hamming(maj3, dict3) == 0.25
    assert math.isclose(d_chow(maj3, dict3), math.sqrt(3) / 2)
    assert d_chow(maj3, dict3) <= 2 * math.sqrt(d_hamming(maj3, dict3))


def test_chow_distance_bounded_by_hamming():
    rng = new_rng(18)
    for _ in range(1000):
        n = int(rng.integers(1, 13))
        f, g = random_monotone_ltf(n, rng), random_monotone_ltf(n, rng)
        assert d_chow(f, g) <= 2 * math.sqrt(d_hamming(f, g)) + 1e-12


def test_zero_distances():
    for d in (d_hamming, d_chow, d_shapley):
        assert d(eu_game, eu_game) == 0
    assert d_chow_partial(maj3, dict3, []) == 0
    assert d_shapley_partial(maj3, dict3, []) == 0


def test_partial_below_full():
    rng = new_rng(19)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        f, g = random_monotone_ltf(n, rng), random_monotone_ltf(n, rng)
        subset = [i for i in range(1, n + 1) if rng.random() < 0.5]
        assert d_chow_partial(f, g, subset) <= d_chow(f, g) + 1e-12
        assert d_shapley_partial(f, g, subset) <= d_shapley(f, g) + 1e-12


def test_partial_with_bias_index():
    # constants agree on every degree-1 coefficient
    plus, minus = constant_plus(3), WeightedLTF((1.,) * 3, 4.)
    assert d_chow(plus, minus) == 0
    assert d_chow_partial(plus, minus, [0]) == 2.
    assert d_chow_partial(plus, minus, [0, 2]) > d_chow(plus, minus)

    rng = new_rng(20)
    for _ in range(50):
        n = int(rng.integers(1, 9))
        f, g = random_monotone_ltf(n, rng), random_monotone_ltf(n, rng)
        bias = chow_exact(f)[0] - chow_exact(g)[0]
        assert math.isclose(d_chow_partial(f, g, range(n + 1)) ** 2,
                            d_chow(f, g) ** 2 + bias ** 2, abs_tol=1e-12)


def test_distance_errors():
    with pytest.raises(DimensionMismatch):
        d_chow(maj3, eu_game)
    with pytest.raises(InvalidParameter):
        d_shapley_partial(maj3, dict3, [0, 1])
    with pytest.raises(InvalidParameter):
        d_chow(shapley_exact(maj3), dict3)


def test_partial_distance():
    target = PartialIndexVector(IndexKind.CHOW, 3, ((0, 0.), (1, 1.)))
    assert partial_distance(target, chow_exact(dict3)) == 0
    assert math.isclose(partial_distance(target, chow_exact(maj3)), 0.5)
    assert d_chow_partial(target, maj3, [0, 1]) == \
        partial_distance(target, chow_exact(maj3))


################
# INDEX TYPES  #
################

def test_index_vector_types():
    vector = chow_exact(maj3)
    partial = vector.partial([0, 2])
    assert partial.indices == (0, 2)
    assert partial[2] == 0.5
    assert 1 not in partial
    assert partial.degree_one().indices == (2,)
    assert IndexVector.from_dict(vector.to_dict()) == vector
    assert PartialIndexVector.from_dict(partial.to_dict()) == partial

    with pytest.raises(DimensionMismatch):
        IndexVector(IndexKind.CHOW, 3, (0.5, 0.5))
    with pytest.raises(InvalidParameter):
        PartialIndexVector(IndexKind.CHOW, 3, ((1, 0.5), (1, 0.2)))
    with pytest.raises(InvalidParameter):
        PartialIndexVector(IndexKind.CHOW, 3, ((4, 0.5),))
    with pytest.raises(KeyError):
        shapley_exact(maj3)[0]
