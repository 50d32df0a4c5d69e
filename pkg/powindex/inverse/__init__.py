# -*- coding: utf-8 -*-
""" Reconstruction of LTFs from partial power indices

.. moduleauthor:: powindex team


"""

from .config import ChowReconConfig, ShapReconConfig, VerifyMode, \
    paper_exact_parameters
from .candidates import CandidateLTF, ReconstructionResult
from .chow import ChowReconstruction, reconstruct_partial_chow
from .recover import RecoverResult, recover_weights
from .shapley import AffineConstants, ShapleyReconstruction, \
    affine_constants, reconstruct_partial_shapley
