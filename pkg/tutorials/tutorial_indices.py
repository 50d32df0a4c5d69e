#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np

from powindex import GameSpec, from_game
from powindex.analysis import chow_exact, chow_pbiased_exact, d_chow, \
    d_hamming, dshap_sample, shapley_estimate, shapley_exact, \
    shapley_from_correlations
from powindex.core.ltf import critical_index, regularity, sort_by_magnitude
from powindex.io.json import load_game

rng = np.random.default_rng(2024)

# Council of the EEC, 1957: France, Germany, Italy, Belgium, the Netherlands
# and Luxembourg
print("Loading game...")
eu = load_game('../data/eu_1957.json')
print("Done !")

## Exact indices
shapley = shapley_exact(eu)
chow = chow_exact(eu)

print(shapley.to_frame())
print('Luxembourg: {}'.format(shapley[6]))
print('Sum of the Shapley indices: {}'.format(shapley.total()))
print(chow.to_frame())

## The same indices through the Shapley distribution
print(shapley_from_correlations(eu).to_frame())

## p-biased Chow parameters
for p in (0.2, 0.5, 0.8):
    print(p, chow_pbiased_exact(eu, p).values)

## Sampled indices
estimate = shapley_estimate(eu, eu.n, 0.05, 0.05, rng)
print('max estimation error: {:.4f}'.format(
    np.max(np.abs(estimate.as_array() - shapley.as_array()))))

## Distances
even = from_game(GameSpec((49, 49, 2), 51))
maj3 = load_game('../data/maj3.json')
print('d(even, maj3) = {}'.format(d_hamming(even, maj3)))
print('d_chow(even, maj3) = {}'.format(d_chow(even, maj3)))

## Structure of the weights
f = sort_by_magnitude(eu)
print('regularity: {:.3f}'.format(regularity(f)))
report = critical_index(f.w, 0.5)
print('0.5-critical index: {}'.format(report.critical_index))

## Samples of the Shapley distribution
X = dshap_sample(10, rng, size=5)
print(X)
