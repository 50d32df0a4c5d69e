# -*- coding: utf-8 -*-
"""
Tolerances and enumeration caps
"""
import math

# Relative tolerance for comparisons against grid multiples
REL_TOL = 1e-9
# Absolute tolerance of the numerical identities checked downstream
ABS_TOL = 1e-12

# Largest n for which the hypercube is fully enumerated
CHOW_ENUMERATION_CAP = 24
SHAPLEY_ENUMERATION_CAP = 20
SHAPLEY_DP_CAP = 64
# Largest head for the exact head average of alpha
HEAD_ENUMERATION_CAP = 20
# Largest number of table entries of the weight recovery dynamic program
RECOVER_STATE_CAP = 2 ** 24
# Truth-table de-duplication of juntas
JUNTA_DEDUP_CAP = 6
# Exhaustive truth-table enumeration through the LP oracle
JUNTA_LP_CAP = 4

# Block size (in bits) of the chunked hypercube enumeration
CUBE_BLOCK_BITS = 16

# Quadrature
QUAD_EPSABS = 1e-10
QUAD_EPSREL = 1e-10
QUAD_LIMIT = 200

# Gaussian tails are clamped beyond this threshold
THETA_CLAMP = 40.

# Explicit constant of the Hoeffding-form sample bounds
HOEFFDING_CONSTANT = 2.


def is_close(a, b, rel_tol=REL_TOL, abs_tol=ABS_TOL):
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


def is_grid_multiple(x, step, rel_tol=REL_TOL):
    """
    True if x is an integer multiple of step, up to rel_tol (relative to the
    quotient)

    :param x:
    :param step:
    :return:
    """
    q = x / step
    return abs(q - round(q)) <= rel_tol * max(1., abs(q))


def grid_round(x, step):
    """
    Nearest integer multiple of step, halves rounded up

    :param x:
    :param step:
    :return: the integer quotient
    """
    return int(math.floor(x / step + 0.5))
