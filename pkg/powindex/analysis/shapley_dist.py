# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

The Shapley distribution D_Shap on {-1,1}^n, its orthonormal degree-1 basis,
and the K(delta) / Q(delta) mixtures of p-biased distributions that
approximate it.

D_Shap puts mass Q(n,k)/Lambda(n), Q(n,k) = 1/k + 1/(n-k), on the weight-k
slice (k = 1..n-1), uniformly inside the slice, with Lambda(n) = 2 H_{n-1}.
Every quantity below only depends on the slice averages of f and f x_i and
is computed from powindex.analysis.exact.SliceStatistics.

"""

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad, quad_vec
from scipy.special import comb

from ..core.cube import check_cap, cube, popcounts
from ..core.indices import IndexKind, IndexVector
from ..core.ltf import linear_form
from ..exceptions import DimensionMismatch, InvalidParameter, QuadratureError
from ..utils.numerics import QUAD_EPSABS, QUAD_EPSREL, QUAD_LIMIT, \
    SHAPLEY_ENUMERATION_CAP
from .exact import slice_statistics


@dataclass(frozen=True)
class DShapParams:
    n: int
    lambda_n: float
    slice_probs: tuple

    def slice_weights(self):
        """ Mass of every slice k = 0..n, zero on the two constants """
        return np.concatenate([[0.], self.slice_probs, [0.]])


@lru_cache(maxsize=64)
def dshap_params(n):
    """
    :param n: >= 2
    :return: DShapParams
    """
    if n < 2:
        raise InvalidParameter('n', n, 'n >= 2')
    lambda_n = 2 * math.fsum(1. / k for k in range(1, n))
    probs = tuple((1. / k + 1. / (n - k)) / lambda_n for k in range(1, n))
    return DShapParams(n=n, lambda_n=lambda_n, slice_probs=probs)


def dshap_pmf(n, x):
    """
    Probability of the string x under D_Shap

    :param n:
    :param x: +/-1 sequence of length n
    :return:
    """
    x = np.asarray(x)
    if len(x) != n:
        raise DimensionMismatch(n, len(x))
    k = int(np.count_nonzero(x > 0))
    if k in (0, n):
        return 0.
    return dshap_params(n).slice_probs[k - 1] / comb(n, k)


def dshap_pmf_table(n, cap=SHAPLEY_ENUMERATION_CAP):
    """ D_Shap probability of every row of the hypercube enumeration """
    check_cap(n, cap)
    per_slice = dshap_params(n).slice_weights() / comb(n, np.arange(n + 1))
    return per_slice[popcounts(n)]


def dshap_sample(n, rng, size=None):
    """
    Two-stage sampler: a slice k with probability Q(n,k)/Lambda(n), then a
    uniform string of that slice

    :param n:
    :param rng: numpy Generator
    :param size: number of samples, None for a single string
    :return: (n,) or (size, n) int8 array
    """
    params = dshap_params(n)
    count = 1 if size is None else size
    ks = rng.choice(np.arange(1, n), size=count, p=params.slice_probs)
    ranks = rng.random((count, n)).argsort(axis=1).argsort(axis=1)
    X = np.where(ranks < ks[:, None], 1, -1).astype(np.int8)
    return X[0] if size is None else X


def dshap_expectation(n, values, cap=SHAPLEY_ENUMERATION_CAP):
    """
    E_{D_Shap}[g] for g given by its values on the hypercube rows

    :param n:
    :param values: (2^n,) array
    :return:
    """
    return float(dshap_pmf_table(n, cap) @ np.asarray(values, dtype=float))


def dshap_disagreement(f, g, cap=SHAPLEY_ENUMERATION_CAP):
    """ Pr_{x ~ D_Shap}[f(x) != g(x)] """
    if f.n != g.n:
        raise DimensionMismatch(f.n, g.n)
    return dshap_expectation(f.n, f.truth_table(cap) != g.truth_table(cap),
                             cap)


def dshap_small_value_probability(w, theta, r, cap=SHAPLEY_ENUMERATION_CAP):
    """ Pr_{x ~ D_Shap}[|w.x - theta| < r] """
    w = np.asarray(w, dtype=float)
    n = len(w)
    margins = np.abs(linear_form(w, cube(n, cap), theta))
    return dshap_expectation(n, margins < r, cap)


@dataclass(frozen=True)
class ShapleyBasis:
    """
    L_0 = 1 and L_i(x) = a (sum_j x_j) + b x_i, orthonormal under D_Shap
    """
    n: int
    a: float
    b: float

    def evaluate(self, X, i):
        """
        L_i on every row of X

        :param X: (N, n) array of +/-1
        :param i: 0..n
        :return:
        """
        X = np.atleast_2d(X)
        if i == 0:
            return np.ones(X.shape[0])
        return self.a * X.sum(axis=1) + self.b * X[:, i - 1]

    def gram(self):
        """ <L_i, L_j> under D_Shap for i, j in 0..n, from exact moments """
        rho = pair_correlation(self.n)
        n, a, b = self.n, self.a, self.b
        cross = 1 + (n - 1) * rho
        off = a * a * n * cross + 2 * a * b * cross + b * b * rho
        diag = a * a * n * cross + 2 * a * b * cross + b * b
        gram = np.full((n + 1, n + 1), off)
        np.fill_diagonal(gram, diag)
        gram[0, :] = 0.
        gram[:, 0] = 0.
        gram[0, 0] = 1.
        return gram


def pair_correlation(n):
    """
    E_{D_Shap}[x_i x_j] for i != j. On the weight-k slice it equals
    ((2k - n)^2 - n) / (n (n - 1)).
    """
    k = np.arange(1, n)
    per_slice = ((2 * k - n) ** 2 - n) / (n * (n - 1.))
    return float(np.dot(dshap_params(n).slice_probs, per_slice))


def shapley_basis(n):
    """
    Solves <L_i, L_j> = delta_ij under D_Shap for (a, b).

    With rho = E[x_i x_j] and M = E[(sum_j x_j) x_i] = 1 + (n-1) rho, the
    equations reduce to b^2 (1 - rho) = 1 and
    n M a^2 + 2 b M a + b^2 rho = 0. The root with a < 0 is kept.
    <L_i, L_0> = 0 holds for any (a, b) since D_Shap is symmetric under
    negation.

    :param n: >= 3; at n = 2 the support is {(1,-1), (-1,1)} where
        x_1 = -x_2 and no such basis exists
    :return: ShapleyBasis
    """
    if n < 3:
        raise InvalidParameter('n', n, 'n >= 3 (x_1 = -x_2 on the support '
                                       'of D_Shap when n = 2)')
    rho = pair_correlation(n)
    cross = 1 + (n - 1) * rho
    b = 1. / math.sqrt(1 - rho)
    a = b * (-cross - math.sqrt(cross * (1 - rho))) / (n * cross)
    return ShapleyBasis(n=n, a=a, b=b)


def coordinate_correlations_shap(f, step=None):
    """
    f*(i) = E_{D_Shap}[f(x) x_i] for every i

    :param f: WeightedLTF
    :param step: grid step of the weights, enables the dynamic program
    :return: (n,) array
    """
    stats = slice_statistics(f, step=step, cap=SHAPLEY_ENUMERATION_CAP)
    return dshap_params(f.n).slice_weights() @ stats.fx_averages()


def coordinate_correlation_shap(f, i, step=None):
    """ f*(i) = E_{D_Shap}[f(x) x_i] """
    return float(coordinate_correlations_shap(f, step)[i - 1])


def shapley_from_correlations(f, step=None):
    """
    Shapley indices through the D_Shap correlations:
    f<>(i) = (f(1^n) - f((-1)^n))/n + (Lambda(n)/2)(f*(i) - avg_j f*(j))

    :param f: monotone WeightedLTF
    :return: IndexVector(SHAPLEY)
    """
    correlations = coordinate_correlations_shap(f, step)
    lambda_n = dshap_params(f.n).lambda_n
    values = (f.at_ones() - f.at_minus_ones()) / f.n \
        + lambda_n / 2 * (correlations - correlations.mean())
    return IndexVector(IndexKind.SHAPLEY, f.n, values)


def shapley_fourier_coefficients(f, step=None):
    """
    f^(i) = E_{D_Shap}[f L_i] for i = 0..n

    :param f: WeightedLTF
    :return: (n+1,) array
    """
    basis = shapley_basis(f.n)
    stats = slice_statistics(f, step=step, cap=SHAPLEY_ENUMERATION_CAP)
    weights = dshap_params(f.n).slice_weights()
    correlations = weights @ stats.fx_averages()
    mean = float(weights @ stats.f_averages())
    degree_one = basis.a * correlations.sum() + basis.b * correlations
    return np.concatenate([[mean], degree_one])


def shapley_fourier_coeff(f, i, step=None):
    return float(shapley_fourier_coefficients(f, step)[i])


def shapley_fourier_distance(f, g):
    """ l2 distance between the Shapley-Fourier coefficients 0..n """
    if f.n != g.n:
        raise DimensionMismatch(f.n, g.n)
    return float(np.linalg.norm(shapley_fourier_coefficients(f)
                                - shapley_fourier_coefficients(g)))


@dataclass(frozen=True)
class QuadratureConfig:
    epsabs: float = QUAD_EPSABS
    epsrel: float = QUAD_EPSREL
    limit: int = QUAD_LIMIT


@dataclass(frozen=True)
class KDeltaParams:
    """
    K(delta): density C_delta (1/p + 1/(1-p)) / Lambda(n) on [delta, 1-delta]
    """
    n: int
    delta: float
    c_delta: float

    def density(self, p):
        p = np.asarray(p, dtype=float)
        inside = (self.delta <= p) & (p <= 1 - self.delta)
        value = np.where(inside, self.c_delta * (1 / p + 1 / (1 - p))
                         / dshap_params(self.n).lambda_n, 0.)
        return float(value) if value.ndim == 0 else value


def kdelta_params(n, delta):
    """
    :param n:
    :param delta: in (0, 1/2), meant to be n^{-c} with c > 1
    :return: KDeltaParams with C_delta = Lambda(n) / (2 ln(1/delta - 1))
    """
    if not 0 < delta < 0.5:
        raise InvalidParameter('delta', delta, 'a real in (0, 1/2)')
    if delta >= 1. / n:
        warnings.warn('delta={} is not of the form n^-c with c > 1 (n={})'
                      .format(delta, n))
    lambda_n = dshap_params(n).lambda_n
    return KDeltaParams(n=n, delta=delta,
                        c_delta=lambda_n / (2 * math.log(1 / delta - 1)))


def integrate(func, a, b, quadrature_cfg=None):
    """
    Adaptive Gauss-Kronrod quadrature (QUADPACK) raising on non-convergence

    :param func: scalar or vector valued integrand
    :param a:
    :param b:
    :param quadrature_cfg: QuadratureConfig
    :return: the integral
    """
    cfg = quadrature_cfg or QuadratureConfig()
    midpoint = np.asarray(func(0.5 * (a + b)))
    if midpoint.ndim == 0:
        result = quad(func, a, b, epsabs=cfg.epsabs, epsrel=cfg.epsrel,
                      limit=cfg.limit, full_output=1)
        if len(result) > 3:
            raise QuadratureError(result[3], value=result[0],
                                  abserr=result[1])
        return result[0]
    value, abserr, info = quad_vec(func, a, b, epsabs=cfg.epsabs,
                                   epsrel=cfg.epsrel, limit=cfg.limit,
                                   full_output=True)
    if not info.success:
        raise QuadratureError(info.message, value=value, abserr=abserr)
    return value


def _bias_weight(p, lambda_n):
    return (1 / p + 1 / (1 - p)) / lambda_n


def qdelta_expectation(f, delta, quadrature_cfg=None, step=None):
    """
    (1/C_delta) E_{Q(delta)}[f] = int_delta^{1-delta} (1/p + 1/(1-p))/Lambda(n)
    E_{u_p^n}[f] dp, with f taken as 0 on 1^n and (-1)^n

    :param f: WeightedLTF
    :param delta:
    :param quadrature_cfg: QuadratureConfig
    :param step: grid step of the weights, enables the dynamic program
    :return:
    """
    kdelta_params(f.n, delta)
    lambda_n = dshap_params(f.n).lambda_n
    stats = slice_statistics(f, step=step, cap=SHAPLEY_ENUMERATION_CAP)
    return float(integrate(
        lambda p: _bias_weight(p, lambda_n)
        * stats.pbiased_mean(p, drop_constants=True),
        delta, 1 - delta, quadrature_cfg))


def qdelta_correlations(f, delta, quadrature_cfg=None, step=None):
    """
    Approximate Shapley indices obtained by replacing D_Shap with the
    Q(delta) mixture in the correlation identity:

        (f(1^n) - f((-1)^n))/n + (Lambda(n)/2) int_delta^{1-delta}
            (1/p + 1/(1-p))/Lambda(n) (f*(i,p) - avg_j f*(j,p)) dp

    They are O(n delta) close to the Shapley indices.

    :param f: monotone WeightedLTF
    :param delta:
    :return: IndexVector(SHAPLEY)
    """
    kdelta_params(f.n, delta)
    lambda_n = dshap_params(f.n).lambda_n
    stats = slice_statistics(f, step=step, cap=SHAPLEY_ENUMERATION_CAP)

    def integrand(p):
        correlations = stats.pbiased_correlations(p)
        return _bias_weight(p, lambda_n) * (correlations - correlations.mean())

    integral = integrate(integrand, delta, 1 - delta, quadrature_cfg)
    values = (f.at_ones() - f.at_minus_ones()) / f.n + lambda_n / 2 * integral
    return IndexVector(IndexKind.SHAPLEY, f.n, values)


def qdelta_tv_distance(n, delta, quadrature_cfg=None):
    """
    sum_x |(1/C_delta) Q(delta)(x) - D_Shap(x)| over the strings with
    1 <= #(+1) <= n-1, slice by slice. The two constant strings carry no
    D_Shap mass and are left out.

    :param n:
    :param delta:
    :return:
    """
    kdelta_params(n, delta)
    params = dshap_params(n)
    k = np.arange(n + 1)
    sizes = comb(n, k)

    def integrand(p):
        return _bias_weight(p, params.lambda_n) * p ** k * (1 - p) ** (n - k)

    mixture = integrate(integrand, delta, 1 - delta, quadrature_cfg)
    target = params.slice_weights() / sizes
    gaps = sizes * np.abs(mixture - target)
    return float(np.sum(gaps[1:-1]))
