#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np

from powindex.analysis import chow_exact, d_shapley_partial, shapley_exact
from powindex.core.generators import eu_1957, majority
from powindex.inverse import ChowReconstruction, ShapReconConfig, \
    paper_exact_parameters, reconstruct_partial_shapley
from powindex.io.json import mask_index_vector, save_result

rng = np.random.default_rng(7)

## Partial Chow parameters

# Chow parameters of the majority of 8 voters, known on S = {0..4}
maj8 = majority(8)
target = mask_index_vector(chow_exact(maj8), range(5))

solver = ChowReconstruction(target, 8,
                            parameters_path='recon_params.yaml',
                            rng=rng, verbose=True)
result = solver.run()

print('certified: {}'.format(result.certified))
print('distance on S: {:.4f} (threshold {:.4f})'.format(
    result.achieved_distance, solver.cfg.threshold))
print(result.ltf)
save_result(result, 'chow_result')

## Partial Shapley indices

# Shapley indices of France, Belgium and Luxembourg only
eu = eu_1957()
target = mask_index_vector(shapley_exact(eu), (1, 4, 6))

cfg = ShapReconConfig(eps=0.2)
result = reconstruct_partial_shapley(target, 6, cfg, rng)
print('certified: {}, after {} candidates'.format(result.certified,
                                                  result.candidates_tried))
print('distance on S: {:.4f}'.format(
    d_shapley_partial(result.ltf, target, target.indices)))
print(shapley_exact(result.ltf).to_frame())

## What the asymptotic parameter formulas would ask for
print(paper_exact_parameters('chow', 0.1, 100).to_string(index=False))
print(paper_exact_parameters('shapley', 0.1, 100).to_string(index=False))
