# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Tests of the partial Shapley indices solver

"""

import math

import numpy as np
import pytest

from settings import eu_game, new_rng

from powindex.analysis.distances import d_shapley, partial_distance
from powindex.analysis.exact import shapley_exact
from powindex.core.generators import majority, random_monotone_ltf
from powindex.core.indices import PartialIndexVector
from powindex.core.ltf import GameSpec, WeightedLTF, from_game, \
    regularity
from powindex.exceptions import InvalidParameter, QuadratureError
from powindex.inverse import shapley as shapley_module
from powindex.inverse.candidates import STRUCTURED, \
    enumerate_junta_candidates
from powindex.inverse.config import ShapReconConfig
from powindex.inverse.shapley import ETA_MIN, ShapleyReconstruction, \
    affine_constants, discretize_for_reconstruction, evenly_spaced, \
    reconstruct_partial_shapley


####################
# AFFINE CONSTANTS #
####################

def test_affine_constants_scaling():
    base = affine_constants((1., 0.5), 2., 1., 0.25, 0.01, n=10)
    scaled = affine_constants((3., 1.5), 6., 3., 0.75, 0.01, n=10)
    assert math.isclose(scaled.a_diamond, base.a_diamond / 3)
    assert math.isclose(scaled.b_diamond, base.b_diamond)
    assert math.isclose(scaled.gamma_diamond, base.gamma_diamond)


def test_affine_constants_head_order():
    first = affine_constants((1., 0.5), 2., 1., 0.25, 0.01, n=10)
    second = affine_constants((0.5, 1.), 2., 1., 0.25, 0.01, n=10)
    assert first.a_diamond == second.a_diamond
    assert first.b_diamond == second.b_diamond


def test_affine_constants_sum():
    # predictions over all n coordinates add up to 2
    w_H, w_T = (1., 0.5), (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    W1, W2 = math.fsum(w_T), math.sqrt(math.fsum(w * w for w in w_T))
    constants = affine_constants(w_H, W1, W2, 0.3, 0.01, n=10)
    total = math.fsum(constants.predict(w_H + w_T))
    assert math.isclose(total, 2., rel_tol=1e-9)


def test_affine_constants_default_n():
    implied = affine_constants((), 2., 1., 0., 0.01)
    explicit = affine_constants((), 2., 1., 0., 0.01, n=10)
    assert implied == explicit


@pytest.mark.parametrize('W2, delta', [(0., 0.01), (-1., 0.01), (1., 0.6)])
def test_affine_constants_errors(W2, delta):
    with pytest.raises(InvalidParameter):
        affine_constants((), 2., W2, 0., delta)


def test_affine_fit_regular_tail():
    f = WeightedLTF(tuple(np.linspace(0.8, 1., 12)), 0.3)
    constants = affine_constants((), f.l1, float(np.linalg.norm(f.w)),
                                 f.threshold, 1. / 144, n=12)
    predicted = constants.predict(f.w)
    assert np.max(np.abs(shapley_exact(f).as_array() - predicted)) <= 0.02


def test_affine_fit_degrades_with_irregularity():
    residuals, taus = [], []
    for big in (1., 2., 3.):
        f = WeightedLTF((big,) + (1.,) * 11, 0.5)
        constants = affine_constants((), f.l1, f.l2, f.threshold, 1. / 144,
                                     n=12)
        gaps = shapley_exact(f).as_array() - constants.predict(f.w)
        residuals.append(float(np.sum(gaps ** 2)))
        taus.append(regularity(f.w))
    # equal weights: the predictions are all 2/n
    assert residuals[0] <= 1e-12
    assert residuals[0] < residuals[1] < residuals[2]
    assert taus[0] < taus[1] < taus[2]


def _matched_tail(u, l1, l2):
    """ Affine image of u with the given l1 and l2 norms, None if negative """
    t = len(u)
    spread = np.sum((u - u.mean()) ** 2)
    radicand = l2 ** 2 - l1 ** 2 / t
    if spread <= 0 or radicand < 0:
        return None
    tail = math.sqrt(radicand / spread) * (u - u.mean()) + l1 / t
    return tail if tail.min() > 0 else None


def _head_shift(t, rng):
    first = rng.uniform(0.05, 1., t)
    l1, l2 = float(first.sum()), float(np.linalg.norm(first))
    second = _matched_tail(rng.uniform(0.05, 1., t), l1, l2)
    if second is None:
        return None
    head = (0.8 * l2, 0.5 * l2)
    theta = float(rng.uniform(-0.3, 0.3)) * (sum(head) + l1)
    f = WeightedLTF(head + tuple(first), theta)
    g = WeightedLTF(head + tuple(second), theta)
    gaps = shapley_exact(f).as_array()[:2] - shapley_exact(g).as_array()[:2]
    return float(np.sum(gaps ** 2))


def test_head_indices_stable_under_tail_exchange():
    # tails with equal l1 and l2 norms give close head indices, closer when
    # the tails are more regular
    rng = new_rng(49)
    shifts = {}
    for t in (3, 10):
        values = [_head_shift(t, rng) for _ in range(40)]
        values = [v for v in values if v is not None]
        assert len(values) >= 20
        shifts[t] = np.mean(values)
    assert shifts[10] < shifts[3]
    assert shifts[10] <= 0.01


#########
# GRIDS #
#########

def test_evenly_spaced():
    assert evenly_spaced(1, 4, 16) == [1, 2, 3, 4]
    assert evenly_spaced(3, 2, 16) == []
    spaced = evenly_spaced(1, 96, 16)
    assert spaced[0] == 1 and spaced[-1] == 96
    assert len(spaced) == 16


def test_solver_grids():
    target = PartialIndexVector('shapley', 6, {1: 0.5, 4: 0.3})
    solver = ShapleyReconstruction(target, 6, rng=new_rng())
    heads = [head for _, head, _ in solver.head_guesses()]
    assert heads[:6] == [(), (2,), (1,), (2, 3), (1, 2), (1, 4)]
    assert len(heads) == len(set(heads))

    grid = list(solver.head_weight_grid(2))
    assert all(max(w) == 1. for w in grid)
    assert len(grid) == 7

    gamma = solver.cfg.gamma
    for theta in solver.theta_grid(2.):
        assert abs(theta) <= (1 - ETA_MIN) * 2.
        assert math.isclose(theta / gamma, round(theta / gamma))

    for z1, m in solver.tail_norm_grid(5, 1.):
        assert z1 ** 2 / 5 <= m + 1e-9
        assert m <= (solver.cfg.tau_star * z1) ** 2 + 1e-9


##################
# DISCRETIZATION #
##################

def test_discretize_keeps_grid_games():
    for gamma in (0.25, 1. / 16):
        g = discretize_for_reconstruction(eu_game, gamma)
        assert g.truth_table().tolist() == eu_game.truth_table().tolist()
    g = discretize_for_reconstruction(eu_game, cfg=ShapReconConfig())
    assert d_shapley(eu_game, g) == 0.


def test_discretize_coarse_grid():
    coarse = discretize_for_reconstruction(eu_game, 0.5)
    assert d_shapley(eu_game, coarse) > 0


##########
# SOLVER #
##########

def test_empty_subset_certified():
    target = PartialIndexVector('shapley', 5, {})
    result = reconstruct_partial_shapley(target, 5, rng=new_rng())
    assert result.certified
    assert result.candidates_tried == 1


def test_index_zero_rejected():
    target = PartialIndexVector('shapley', 3, {0: 0.1, 1: 0.5})
    with pytest.raises(InvalidParameter):
        reconstruct_partial_shapley(target, 3)


def test_luxembourg():
    target = shapley_exact(eu_game).partial((1, 4, 6))
    cfg = ShapReconConfig()
    result = reconstruct_partial_shapley(target, 6, cfg, new_rng())
    assert result.certified
    assert result.achieved_distance <= 2 * cfg.eps + 1e-12
    assert math.isclose(
        result.achieved_distance,
        partial_distance(target, shapley_exact(result.ltf)), abs_tol=1e-9)


def test_budget_exhausted():
    target = shapley_exact(eu_game).partial((1, 4, 6))
    cfg = ShapReconConfig(max_candidates=1)
    result = reconstruct_partial_shapley(target, 6, cfg, new_rng())
    assert not result.certified
    assert result.candidates_tried == 1


def test_config_errors():
    with pytest.raises(InvalidParameter):
        ShapReconConfig(head_step=0.1)
    with pytest.raises(InvalidParameter) as excinfo:
        ShapReconConfig(gamma=0.3, head_step=0.3)
    assert excinfo.value.name == 'gamma'
    with pytest.raises(InvalidParameter):
        ShapReconConfig.from_params({'gamma': '0.3', 'head_step': 0.6})
    assert ShapReconConfig(gamma=0.125, head_step=0.25).gamma == 0.125
    with pytest.raises(InvalidParameter):
        ShapReconConfig(delta_q=0.7)
    assert ShapReconConfig(k_star=1).head_cap == 1
    assert ShapReconConfig().quad_delta(10) == 0.01


@pytest.mark.parametrize('f', [majority(5),
                               from_game(GameSpec((2, 1, 1, 1, 1), 3))])
def test_structured_candidate_wins(f):
    # no junta on at most three coordinates fits five nonzero indices
    target = shapley_exact(f).partial(range(1, 6))
    cfg = ShapReconConfig(eps=0.1)
    solver = ShapleyReconstruction(target, 5, config=cfg, rng=new_rng())
    for _, head, _ in solver.head_guesses():
        for c in enumerate_junta_candidates(head, cfg.junta_weight_bound, 5,
                                            seen=set()):
            assert partial_distance(target, shapley_exact(c.ltf)) \
                > cfg.threshold

    result = solver.run()
    assert result.certified
    assert result.provenance.kind == STRUCTURED
    assert partial_distance(target, shapley_exact(result.ltf)) \
        <= cfg.threshold + 1e-12


def test_empty_cells_skipped(monkeypatch):
    # sum z_i and sum z_i^2 have the same parity, the other cells are empty;
    # tables beyond recover_state_cap are not built
    calls = []

    def failing(w_H, W1, W2, theta, delta, quadrature_cfg=None, n=None):
        calls.append((W1, W2))
        raise QuadratureError('skipped')

    monkeypatch.setattr(shapley_module, 'affine_constants', failing)
    target = shapley_exact(majority(5)).partial(range(1, 6))
    solver = ShapleyReconstruction(target, 5, rng=new_rng())
    assert list(solver.structured_candidates((), (1, 2, 3, 4, 5))) == []

    gamma = solver.cfg.gamma
    cells = solver.tail_norm_grid(5, 1.)
    even = [(z1, m) for z1, m in cells if (m - z1) % 2 == 0
            and 6 * (z1 + 1) * (m + 1) <= solver.cfg.recover_state_cap]
    assert 0 < len(even) < len(cells)
    seen = {(round(W1 / gamma), round((W2 / gamma) ** 2))
            for W1, W2 in calls}
    assert seen == set(even)


#################
# RANDOM SUITES #
#################

@pytest.mark.slow
def test_luxembourg_all_indices():
    target = shapley_exact(eu_game).partial(range(1, 7))
    cfg = ShapReconConfig(eps=0.2)
    result = reconstruct_partial_shapley(target, 6, cfg, new_rng())
    assert result.certified
    assert partial_distance(target, shapley_exact(result.ltf)) \
        <= cfg.threshold + 1e-12
    assert shapley_exact(result.ltf)[6] <= 0.05


@pytest.mark.slow
def test_random_restricted_suite():
    rng = new_rng(60)
    cfg = ShapReconConfig(eps=0.25)
    certified = 0
    for _ in range(30):
        n = int(rng.integers(3, 11))
        f = random_monotone_ltf(n, rng, eta=0.25)
        size = max(1, int(math.ceil(rng.uniform(0.3, 1.) * n)))
        subset = sorted(int(i) for i in
                        rng.choice(np.arange(1, n + 1), size, replace=False))
        target = shapley_exact(f).partial(subset)

        result = reconstruct_partial_shapley(target, n, cfg, rng)
        assert result.ltf.n == n
        distance = partial_distance(target, shapley_exact(result.ltf))
        assert math.isclose(result.achieved_distance, distance,
                            abs_tol=1e-9)
        if result.certified:
            certified += 1
            assert distance <= cfg.threshold + 1e-12
        else:
            assert distance > cfg.threshold
    assert certified >= 24
