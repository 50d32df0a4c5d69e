# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Gaussian surrogates of regular linear forms: phi, Phi, m, W and alpha, the
p-biased moment maps, and the head-averaged alpha used by the Shapley
reconstruction.

"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import erfc, erfcinv

from ..core.cube import check_cap, cube, iter_cube_blocks, pbiased_weights, \
    popcount_block, popcounts
from ..core.ltf import linear_form, regularity
from ..exceptions import InvalidParameter
from ..utils.numerics import CHOW_ENUMERATION_CAP, HEAD_ENUMERATION_CAP, \
    THETA_CLAMP
from .exact import bias_moments, chow_pbiased_exact

SQRT2 = math.sqrt(2.)
SQRT2PI = math.sqrt(2. * math.pi)


@dataclass(frozen=True)
class BiasParams:
    """
    mu_p = 2p - 1 and sigma_p = 2 sqrt(p(1-p)), mean and standard deviation
    of a p-biased +/-1 bit
    """
    p: float
    mu_p: float = None
    sigma_p: float = None

    def __post_init__(self):
        mu, sigma = bias_moments(self.p)
        object.__setattr__(self, 'mu_p', float(mu))
        object.__setattr__(self, 'sigma_p', float(sigma))

    def psi(self, x):
        """ (x - mu_p) / sigma_p """
        return (x - self.mu_p) / self.sigma_p

    def psi_w(self, x, l1, l2):
        """
        psi_p^[w](x) = (x - mu_p |w|_1) / (sigma_p |w|_2): x standardized by
        the mean and deviation of w.x under u_p^n
        """
        return (x - self.mu_p * l1) / (self.sigma_p * l2)


def phi(x):
    """ Standard normal density """
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * x ** 2) / SQRT2PI


def Phi(x):
    """ Standard normal cdf, through the complementary error function """
    return 0.5 * erfc(-np.asarray(x, dtype=float) / SQRT2)


def m(theta):
    """
    m(theta) = E[sign(x - theta)], x ~ N(0,1), i.e. 2(1 - Phi(theta)) - 1.
    Strictly decreasing from 1 at -inf to -1 at +inf.

    :param theta: real or array, +/-inf allowed
    :return:
    """
    value = erfc(np.asarray(theta, dtype=float) / SQRT2) - 1
    return float(value) if np.ndim(value) == 0 else value


def m_inverse(nu):
    """
    The unique theta with m(theta) = nu: a bracketed root in
    [-THETA_CLAMP, THETA_CLAMP] polished by Newton steps. Values of nu so
    close to +/-1 that the root lies beyond the clamp return -/+THETA_CLAMP.

    :param nu: in (-1, 1)
    :return:
    """
    if not -1 < nu < 1:
        raise InvalidParameter('nu', nu, 'a real in (-1, 1)')
    if m(THETA_CLAMP) >= nu:
        return THETA_CLAMP
    if m(-THETA_CLAMP) <= nu:
        return -THETA_CLAMP

    theta = SQRT2 * float(erfcinv(nu + 1))
    if not math.isfinite(theta) or abs(theta) > THETA_CLAMP:
        theta = brentq(lambda t: m(t) - nu, -THETA_CLAMP, THETA_CLAMP,
                       xtol=1e-14)
    for _ in range(4):
        slope = -2 * float(phi(theta))
        residual = m(theta) - nu
        if slope == 0 or residual == 0:
            break
        theta -= residual / slope
    return float(np.clip(theta, -THETA_CLAMP, THETA_CLAMP))


def W(nu):
    """
    W(nu) = (2 phi(m^{-1}(nu)))^2, with W(+/-1) = 0. Peaks at W(0) = 2/pi.

    :param nu: in [-1, 1]
    :return:
    """
    if not -1 <= nu <= 1:
        raise InvalidParameter('nu', nu, 'a real in [-1, 1]')
    if abs(nu) == 1:
        return 0.
    return float((2 * phi(m_inverse(nu))) ** 2)


def alpha_theta(theta):
    """
    alpha(theta) = sqrt(W(m(theta))) = 2 phi(theta)

    :param theta: real or array
    :return:
    """
    value = 2 * phi(theta)
    return float(value) if np.ndim(value) == 0 else value


def alpha_head_norms(theta, w_H, l1, l2, p, mode='exact', budget=10000,
                     rng=None):
    """
    E_{rho ~ u_p^|H|}[alpha(psi_p^[w_T](theta - w_H . rho))] for a tail with
    l1 norm `l1` and l2 norm `l2`

    :param theta:
    :param w_H: head weights
    :param l1: |w_T|_1
    :param l2: |w_T|_2 > 0
    :param p: bias
    :param mode: 'exact' (2^|H| head assignments) or 'mc'
    :param budget: samples for 'mc'
    :param rng: numpy Generator for 'mc'
    :return:
    """
    if not l2 > 0:
        raise InvalidParameter('w_T', l2, 'a nonempty tail with |w_T|_2 > 0')
    bias = BiasParams(p)
    w_H = np.asarray(w_H, dtype=float)
    h = len(w_H)
    if h == 0:
        return alpha_theta(bias.psi_w(theta, l1, l2))

    if mode == 'exact':
        check_cap(h, HEAD_ENUMERATION_CAP)
        rho = cube(h, cap=HEAD_ENUMERATION_CAP)
        prob = pbiased_weights(popcounts(h), h, p)
        shifts = linear_form(w_H, rho)
        return float(prob @ alpha_theta(bias.psi_w(theta - shifts, l1, l2)))
    if mode == 'mc':
        if rng is None:
            raise InvalidParameter('rng', rng, 'a numpy Generator for mc mode')
        rho = np.where(rng.random((budget, h)) < p, 1, -1)
        shifts = linear_form(w_H, rho)
        return float(np.mean(alpha_theta(bias.psi_w(theta - shifts, l1, l2))))
    raise InvalidParameter('mode', mode, "'exact' or 'mc'")


def alpha_head_tail(theta, w_H, w_T, p, mode='exact', budget=10000, rng=None):
    """
    Head-averaged alpha of an LTF split into head weights w_H and tail
    weights w_T. Depends on w_T only through its l1 and l2 norms.

    :return:
    """
    w_T = np.asarray(w_T, dtype=float)
    return alpha_head_norms(theta, w_H, float(np.sum(w_T)),
                            float(np.linalg.norm(w_T)), p, mode=mode,
                            budget=budget, rng=rng)


def pbiased_cdf_gaussian_bound(w, p, a, b):
    """
    Gaussian approximation of Pr_{x ~ u_p^n}[a <= w.x <= b] and its
    Berry-Esseen error bound 4 tau / sigma_p, tau the regularity of w

    :param w: weights
    :param p: bias
    :param a: lower end
    :param b: upper end
    :return: (gaussian_prob, error_bound)
    """
    w = np.asarray(w, dtype=float)
    tau = regularity(w)
    bias = BiasParams(p)
    if b <= a:
        gaussian = 0.
    else:
        mean = bias.mu_p * np.sum(w)
        deviation = bias.sigma_p * np.linalg.norm(w)
        gaussian = float(Phi((b - mean) / deviation)
                         - Phi((a - mean) / deviation))
    return gaussian, 4 * tau / bias.sigma_p


def anticoncentration_bound(w, p, lam):
    """
    Upper bound 2 lam / (sigma_p |w|_2) + 2 tau / sigma_p on
    Pr_{u_p^n}[|w.x - theta| <= lam], any theta
    """
    w = np.asarray(w, dtype=float)
    bias = BiasParams(p)
    return 2 * lam / (bias.sigma_p * np.linalg.norm(w)) \
        + 2 * regularity(w) / bias.sigma_p


def _pbiased_linear_forms(w, theta, p, cap):
    w = np.asarray(w, dtype=float)
    n = len(w)
    check_cap(n, cap)
    for start, X in iter_cube_blocks(n):
        prob = pbiased_weights(popcount_block(start, len(X), n), n, p)
        yield prob, linear_form(w, X, theta)


def pbiased_interval_probability(w, p, a, b, cap=CHOW_ENUMERATION_CAP):
    """ Exact Pr_{u_p^n}[a <= w.x <= b] by enumeration """
    return float(sum(prob[(a <= v) & (v <= b)].sum()
                     for prob, v in _pbiased_linear_forms(w, 0., p, cap)))


def pbiased_near_threshold_probability(w, theta, p, lam,
                                       cap=CHOW_ENUMERATION_CAP):
    """ Exact Pr_{u_p^n}[|w.x - theta| <= lam] by enumeration """
    return float(sum(prob[np.abs(v) <= lam].sum()
                     for prob, v in _pbiased_linear_forms(w, theta, p, cap)))


def pbiased_mean_absolute_margin(f, p, cap=CHOW_ENUMERATION_CAP):
    """ Exact E_{u_p^n}|w.x - theta| """
    return float(sum(prob @ np.abs(v) for prob, v in
                     _pbiased_linear_forms(f.w, f.threshold, p, cap)))


def mean_approximation(f, p):
    """
    Gaussian estimate m(psi_p^[w](theta)) of E_{u_p^n}[f] for a regular LTF
    """
    return m(BiasParams(p).psi_w(f.threshold, f.l1, f.l2))


def marginal_approximation(f, p):
    """
    Gaussian estimate of E_{u_p^n}|w.x - theta|:
    |w|_2 sigma_p (2 phi(psi) - psi m(psi)), psi = psi_p^[w](theta)
    """
    bias = BiasParams(p)
    psi = bias.psi_w(f.threshold, f.l1, f.l2)
    return f.l2 * bias.sigma_p * (2 * float(phi(psi)) - psi * m(psi))


def proportionality_residual(f, p, cap=CHOW_ENUMERATION_CAP):
    """
    sum_i (f^(i, p) - alpha(psi_p^[w](theta)) w_i)^2 for a unit-norm LTF:
    how far the p-biased Chow parameters of a regular LTF are from being
    proportional to its weights

    :param f: WeightedLTF with |w|_2 = 1
    :param p:
    :return:
    """
    if abs(f.l2 - 1) > 1e-9:
        raise InvalidParameter('f', str(f), 'an LTF with unit l2 norm')
    coefficients = chow_pbiased_exact(f, p, cap).as_array()
    slope = alpha_theta(BiasParams(p).psi_w(f.threshold, f.l1, f.l2))
    return float(np.sum((coefficients - slope * f.w) ** 2))
