# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Tests of the LTF core: evaluation, games, sorting, regularity, critical
index and discretization

"""

import math

import numpy as np
import pytest

from settings import eu_game, new_rng

from powindex.core.cube import cube, pbiased_weights, popcounts, \
    rows_to_strings, strings_to_rows
from powindex.core.generators import majority, random_monotone_ltf
from powindex.core.ltf import GameSpec, INFINITE, WeightedLTF, \
    attains_threshold, break_ties, critical_index, discretize, evaluate, \
    from_game, integer_representation, is_eta_restricted, permute_inputs, \
    regularity, sort_by_magnitude, tail_norms, to_game
from powindex.exceptions import DimensionMismatch, InvalidParameter, \
    UnsortedWeights


########
# CUBE #
########

def test_row_order():
    X = rows_to_strings(np.array([0, 1, 2, 5]), 3)
    assert X.tolist() == [[-1, -1, -1], [1, -1, -1], [-1, 1, -1],
                          [1, -1, 1]]
    assert strings_to_rows(X).tolist() == [0, 1, 2, 5]


def test_popcounts_and_biased_weights():
    counts = popcounts(4)
    assert counts.tolist() == [int(np.sum(x > 0)) for x in cube(4)]
    for p in (0.2, 0.5, 0.9):
        assert abs(pbiased_weights(counts, 4, p).sum() - 1) < 1e-12


##############
# EVALUATION #
##############

@pytest.mark.parametrize('weights, theta, x, expected', [
    ((49, 49, 2), 2, (1, -1, 1), 1),
    ((1, 1, 1), 0, (1, 1, -1), 1),
    ((4, 4, 4, 2, 2, 1), 7, (1, 1, 1, -1, -1, -1), 1),
    ((1, 1, 1), 0, (-1, -1, 1), -1),
])
def test_evaluate(weights, theta, x, expected):
    assert evaluate(WeightedLTF(weights, theta), x) == expected


def test_evaluate_dimension():
    with pytest.raises(DimensionMismatch):
        evaluate(majority(3), (1, 1))


def test_negative_weights_rejected():
    with pytest.raises(InvalidParameter):
        WeightedLTF((1., -1.), 0.)


#########
# GAMES #
#########

@pytest.mark.parametrize('weights, quota, theta', [
    ((49, 49, 2), 51, 2),
    ((4, 4, 4, 2, 2, 1), 12, 7),
    ((1,), 1, 1),
])
def test_from_game(weights, quota, theta):
    g = GameSpec(weights, quota)
    f = from_game(g)
    assert f.threshold == theta
    for x in cube(g.n):
        coalition = [j + 1 for j in range(g.n) if x[j] > 0]
        assert g.passes(coalition) == (f(x) > 0)


def test_game_round_trip():
    rng = new_rng(1)
    for _ in range(20):
        n = int(rng.integers(2, 13))
        g = GameSpec(tuple(rng.integers(1, 10, n)), int(rng.integers(1, 10)))
        f = from_game(g)
        table = f.truth_table()
        X = cube(n)
        passes = np.array([g.passes(np.nonzero(x > 0)[0] + 1) for x in X])
        assert np.array_equal(table > 0, passes)
        back = to_game(f)
        assert back.raw_weights == g.raw_weights
        assert math.isclose(back.quota, g.quota)


def test_invalid_quota():
    with pytest.raises(InvalidParameter):
        GameSpec((1, 2), 4)
    with pytest.raises(InvalidParameter):
        GameSpec((1, 2), 0)


###########
# SORTING #
###########

def test_sort_by_magnitude():
    f, permutation = sort_by_magnitude(WeightedLTF((1, 3, 2), 0))
    assert f.weights == (3., 2., 1.)
    assert permutation == (2, 3, 1)

    _, permutation = sort_by_magnitude(WeightedLTF((3, 2, 1), 0))
    assert permutation == (1, 2, 3)

    f, permutation = sort_by_magnitude(WeightedLTF((2, 2, 1), 0))
    assert permutation == (1, 2, 3)


def test_sort_preserves_values():
    rng = new_rng(2)
    for _ in range(10):
        f = random_monotone_ltf(int(rng.integers(2, 11)), rng)
        sorted_f, permutation = sort_by_magnitude(f)
        X = cube(f.n)
        assert np.array_equal(sorted_f(permute_inputs(X, permutation)), f(X))


##############
# REGULARITY #
##############

@pytest.mark.parametrize('w, expected', [
    ((1, 1, 1, 1), 0.5),
    ((1, 0, 0), 1.),
    ((3, 4), 0.8),
])
def test_regularity(w, expected):
    assert math.isclose(regularity(w), expected)


def test_regularity_of_zero():
    with pytest.raises(InvalidParameter):
        regularity((0., 0.))


def test_critical_index():
    report = critical_index((4, 2, 1, 1, 1, 1), 0.5)
    assert report.critical_index == 3
    assert report.head_size == 2
    assert math.isclose(report.tail_norms[2], 2.)

    assert critical_index((3, 2, 1), 1.).critical_index == 1

    report = critical_index((8, 4, 2, 1), 0.1)
    assert report.critical_index is INFINITE
    assert report.is_infinite
    assert report.head_size is None


def test_critical_index_unsorted():
    with pytest.raises(UnsortedWeights) as excinfo:
        critical_index((1, 2, 1), 0.5)
    assert excinfo.value.position == 2


def test_tail_decay():
    rng = new_rng(3)
    for _ in range(1000):
        n = int(rng.integers(2, 20))
        w = np.sort(rng.exponential(size=n))[::-1]
        tau = float(rng.uniform(0.05, 0.9))
        report = critical_index(w, tau)
        c = n if report.is_infinite else report.critical_index
        sigma = tail_norms(w)
        for a in range(1, c + 1):
            for b in range(a + 1, c + 1):
                assert sigma[b - 1] < (1 - tau ** 2) ** ((b - a) / 2) \
                    * sigma[a - 1]


def test_regularity_iff_first_index():
    rng = new_rng(4)
    for _ in range(1000):
        w = np.sort(rng.random(int(rng.integers(1, 15))))[::-1]
        tau = float(rng.uniform(0.1, 1.))
        if abs(regularity(w) - tau) < 1e-6:
            continue
        assert (regularity(w) <= tau) == \
            (critical_index(w, tau).critical_index == 1)


###################
# ETA RESTRICTION #
###################

@pytest.mark.parametrize('weights, theta, eta, expected', [
    ((1, 1, 1), 0, 1., True),
    ((1, 1), 2, 0.5, False),
    ((4, 4, 4, 2, 2, 1), 7, 0.5, True),
])
def test_is_eta_restricted(weights, theta, eta, expected):
    assert is_eta_restricted(WeightedLTF(weights, theta), eta) == expected


##################
# DISCRETIZATION #
##################

def test_discretize():
    g = discretize(WeightedLTF((1, 0.333), 0.5), 0.25)
    assert g.weights == (1., 0.25)
    assert g.threshold == 0.5

    f = WeightedLTF((1, 0.5), 0.25)
    assert discretize(f, 0.25) == f


def test_discretize_rescales_and_rounds():
    rng = new_rng(5)
    gamma = 1. / 32
    for _ in range(50):
        f = random_monotone_ltf(int(rng.integers(2, 10)), rng)
        g = discretize(f, gamma)
        top = max(f.weights)
        assert max(g.weights) >= 0.5
        for w, v in zip(f.weights, g.weights):
            assert abs(w / top - v) <= gamma / 2 + 1e-12
        assert abs(f.threshold / top - g.threshold) <= gamma / 2 + 1e-12


def test_discretize_coarse_grid_warns():
    with pytest.warns(UserWarning):
        discretize(WeightedLTF((1, 0.2, 0.1), 0.), 2.)


def test_discretize_invalid_gamma():
    with pytest.raises(InvalidParameter):
        discretize(majority(3), 0.)


##################
# INTEGER GRIDS  #
##################

def test_integer_representation():
    z, quota = integer_representation(eu_game, 1.)
    assert z.tolist() == [4, 4, 4, 2, 2, 1]
    assert quota == 12

    f = WeightedLTF((0.5, 0.25, 0.25), 0.25)
    z, quota = integer_representation(f, 0.25)
    assert z.tolist() == [2, 1, 1]
    # (theta/step + sum z)/2 = 2.5
    assert quota == 3


def test_break_ties():
    maj2 = majority(2)
    assert attains_threshold(maj2, 1.)
    broken = break_ties(maj2, 1.)
    assert broken.threshold == -0.5
    assert np.array_equal(broken.truth_table(), maj2.truth_table())

    maj3 = majority(3)
    assert not attains_threshold(maj3, 1.)
    assert break_ties(maj3, 1.) is maj3


def test_attains_threshold_paths_agree():
    rng = new_rng(6)
    for _ in range(50):
        f = random_monotone_ltf(int(rng.integers(2, 9)), rng, step=0.25)
        assert attains_threshold(f, 0.25) == attains_threshold(f)
