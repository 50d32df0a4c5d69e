# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Parameters of the reconstruction solvers.

The asymptotic parameter formulas of the reconstruction guarantees are far out
of reach at any n. The configurations below keep the structure of the
formulas with runnable desk defaults; paper_exact_parameters reports the
literal values.

"""

import math
from dataclasses import asdict, dataclass, fields
from enum import Enum

import pandas as pd
import yaml

from ..exceptions import InvalidParameter
from ..utils.numerics import CHOW_ENUMERATION_CAP, QUAD_EPSABS, QUAD_EPSREL, \
    QUAD_LIMIT, SHAPLEY_DP_CAP


class VerifyMode(Enum):
    EXACT = 'exact'
    SAMPLED = 'sampled'


def _check_open_unit(name, value):
    if not 0 < value < 1:
        raise InvalidParameter(name, value, 'a real in (0, 1)')


def _check_positive(name, value):
    if value is None or not value > 0:
        raise InvalidParameter(name, value, 'a positive value')


class _ReconConfig(object):
    """
    Shared loading and dumping of the solver configurations
    """

    def to_dict(self):
        obj = asdict(self)
        obj['verify_mode'] = self.verify_mode.value
        return obj

    @classmethod
    def from_params(cls, params, logger=None):
        """
        Builds a configuration from a parameter dictionary (e.g. a YAML file),
        logging every default that gets used

        :param params: dict
        :param logger:
        :return:
        """
        known = {f.name: f for f in fields(cls)}
        unknown = set(params) - set(known)
        if unknown:
            raise InvalidParameter('parameters', sorted(unknown),
                                   'keys among ' + ', '.join(sorted(known)))
        values = {}
        for name, field_ in known.items():
            if name in params and params[name] is not None:
                value = params[name]
                # YAML leaves exponent literals such as 1e-9 as strings;
                # every field but the two enums is numeric
                if isinstance(value, str) and name != 'verify_mode' \
                        and name != 'junta_method':
                    value = float(value)
                values[name] = value
            elif logger is not None:
                logger.info('Using default {} : {}'.format(name,
                                                          field_.default))
        return cls(**values)

    @classmethod
    def from_yaml(cls, parameters_path, logger=None, **overrides):
        """
        Reads a YAML parameter file; keyword overrides (e.g. command-line
        flags) win over the file

        :param parameters_path:
        :param logger:
        :return:
        """
        params = read_parameters(parameters_path)
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_params(params, logger)


def read_parameters(parameters_path):
    """
    :param parameters_path: YAML file
    :return: dict
    """
    with open(parameters_path, 'r') as stream:
        params = yaml.safe_load(stream)
    if params is None:
        return {}
    if not isinstance(params, dict):
        raise InvalidParameter('parameters', parameters_path,
                               'a YAML mapping of parameter names')
    return params


@dataclass
class ChowReconConfig(_ReconConfig):
    """
    tau defaults to eps^2/4; the head grid step to sqrt(tau)/|H| and the
    gamma' grid step to tau
    """
    eps: float = 0.2
    delta: float = 0.05
    tau: float = None
    head_cap: int = 6
    junta_weight_bound: int = 8
    junta_method: str = 'weights'
    grid_step: float = None
    gamma_prime_step: float = None
    head_weight_bound: float = 3.
    theta_slack: float = 3.
    acceptance: float = 2.
    verify_mode: VerifyMode = VerifyMode.EXACT
    max_candidates: int = 200000
    threads: int = 1
    cap: int = CHOW_ENUMERATION_CAP

    def __post_init__(self):
        self.verify_mode = VerifyMode(getattr(self.verify_mode, 'value',
                                              self.verify_mode))
        _check_open_unit('eps', self.eps)
        _check_open_unit('delta', self.delta)
        if self.tau is None:
            self.tau = self.eps ** 2 / 4
        if not 0 < self.tau <= 1:
            raise InvalidParameter('tau', self.tau, 'a real in (0, 1]')
        if self.gamma_prime_step is None:
            self.gamma_prime_step = self.tau
        for name in ('head_cap', 'junta_weight_bound', 'max_candidates',
                     'threads', 'cap'):
            setattr(self, name, int(getattr(self, name)))
        for name in ('junta_weight_bound', 'gamma_prime_step',
                     'head_weight_bound', 'max_candidates', 'threads', 'cap'):
            _check_positive(name, getattr(self, name))
        if self.head_cap < 0:
            raise InvalidParameter('head_cap', self.head_cap, 'head_cap >= 0')
        if self.grid_step is not None:
            _check_positive('grid_step', self.grid_step)
        if self.acceptance < 0:
            raise InvalidParameter('acceptance', self.acceptance,
                                   'a nonnegative factor')
        if self.junta_method not in ('weights', 'lp'):
            raise InvalidParameter('junta_method', self.junta_method,
                                   "'weights' or 'lp'")

    @property
    def threshold(self):
        """ Largest accepted partial distance """
        return self.acceptance * self.eps

    def head_grid_step(self, head_size):
        if self.grid_step is not None:
            return self.grid_step
        return math.sqrt(self.tau) / max(head_size, 1)


@dataclass
class ShapReconConfig(_ReconConfig):
    """
    Desk defaults: gamma = 1/16 granularity of the dynamic program, head
    weights on a 1/4 grid, at most 16 points on each of the theta, W1 and W2
    grids, delta_q = 1/n^2 inside the affine constants.

    A structured candidate costs a quadrature and a weight recovery whose
    table holds (|T| + 1)(Z1 + 1)(m + 1) cells; recover_state_cap skips the
    cells with larger tables and max_candidates bounds the whole stream.
    """
    eps: float = 0.25
    delta_fail: float = 0.05
    tau_star: float = 0.8
    k_star: int = None
    gamma: float = 1. / 16
    head_cap: int = 3
    head_step: float = 0.25
    junta_weight_bound: int = 4
    theta_steps: int = 16
    w1_steps: int = 16
    w2_steps: int = 16
    delta_q: float = None
    acceptance: float = 2.
    verify_mode: VerifyMode = VerifyMode.EXACT
    max_candidates: int = 10000
    threads: int = 1
    cap: int = SHAPLEY_DP_CAP
    recover_state_cap: int = 2 ** 20
    quad_epsabs: float = QUAD_EPSABS
    quad_epsrel: float = QUAD_EPSREL
    quad_limit: int = QUAD_LIMIT

    def __post_init__(self):
        self.verify_mode = VerifyMode(getattr(self.verify_mode, 'value',
                                              self.verify_mode))
        _check_open_unit('eps', self.eps)
        _check_open_unit('delta_fail', self.delta_fail)
        if not 0 < self.tau_star <= 1:
            raise InvalidParameter('tau_star', self.tau_star,
                                   'a real in (0, 1]')
        for name in ('gamma', 'head_step', 'recover_state_cap'):
            _check_positive(name, getattr(self, name))
        for name in ('head_cap', 'junta_weight_bound', 'theta_steps',
                     'w1_steps', 'w2_steps', 'max_candidates', 'threads',
                     'cap', 'quad_limit', 'recover_state_cap'):
            setattr(self, name, int(getattr(self, name)))
        if self.k_star is not None:
            self.k_star = int(self.k_star)
            self.head_cap = min(self.head_cap, self.k_star)
        inverse = 1. / self.gamma
        if abs(inverse - round(inverse)) > 1e-9:
            raise InvalidParameter('gamma', self.gamma,
                                   'the inverse of an integer')
        ratio = self.head_step / self.gamma
        if abs(ratio - round(ratio)) > 1e-9:
            raise InvalidParameter('head_step', self.head_step,
                                   'an integer multiple of gamma')
        if self.delta_q is not None and not 0 < self.delta_q < 0.5:
            raise InvalidParameter('delta_q', self.delta_q,
                                   'a real in (0, 1/2)')

    @property
    def threshold(self):
        return self.acceptance * self.eps

    def quad_delta(self, n):
        """ delta of the K(delta) mixture, 1/n^2 unless set """
        return self.delta_q if self.delta_q is not None else 1. / n ** 2


def _log10_text(log10_value):
    if abs(log10_value) < 6:
        return '{:.6g}'.format(10 ** log10_value)
    return '10^({:.4g})'.format(log10_value)


def paper_exact_parameters(kind, eps, n, delta=0.05):
    """
    Literal values of the asymptotic parameter formulas. Nothing is solved.

    :param kind: 'chow' or 'shapley'
    :param eps:
    :param n:
    :param delta: failure probability
    :return: pandas DataFrame with columns parameter, formula, value
    """
    _check_open_unit('eps', eps)
    log_eps = math.log10(eps)
    log_n = math.log(n)
    rows = []
    if kind == 'chow':
        log_tau = 1000 * log_eps
        log_head = -4 * log_tau
        rows = [
            ('tau', 'eps^1000', _log10_text(log_tau)),
            ('tau^2 (head split)', 'tau^2', _log10_text(2 * log_tau)),
            ('head_cap', '1/tau^4', _log10_text(log_head)),
            ('junta_weight_bound', '2^(|H| log|H|)',
             '2^(|H| log2|H|), |H| = ' + _log10_text(log_head)),
            ('grid_step', 'sqrt(tau)/|H|',
             _log10_text(log_tau / 2 - log_head)),
            ('gamma_prime_step', 'tau', _log10_text(log_tau)),
            ('acceptance', 'O(eps)', '{:.6g}'.format(2 * eps)),
            ('runtime', 'n^2 log(n) log(1/delta) 2^poly(1/eps)',
             '{:.6g} x 2^poly({:.4g})'.format(
                 n ** 2 * log_n * math.log(1 / delta), 1 / eps)),
        ]
    elif kind == 'shapley':
        tau_star = eps ** 2 / log_n ** 4
        k_box = max(4 * log_n ** 9 / eps ** 4, eps ** -12)
        k_eq = max(4 * log_n / tau_star ** 2, eps ** -12)
        log_gamma = -(2 * math.log10(n) + k_box / 2 * math.log10(k_box))
        rows = [
            ('tau_star', 'eps^2/log(n)^4', '{:.6g}'.format(tau_star)),
            ('k_star', 'max(4 log(n)^9/eps^4, 1/eps^12)',
             '{:.6g}'.format(k_box)),
            ('k_star (eq. form)', 'max(4 log(n)/tau_star^2, 1/eps^12)',
             '{:.6g}'.format(k_eq)),
            ('gamma', '1/(n^2 k^(k/2))', _log10_text(log_gamma)),
            ('delta_q', '1/n^2', '{:.6g}'.format(1. / n ** 2)),
            ('acceptance', 'O(eps)', '{:.6g}'.format(2 * eps)),
            ('runtime', '2^(O~(log(n)^18/eps^24)) log(1/delta_fail)',
             '2^({:.4g}) x {:.4g}'.format(log_n ** 18 / eps ** 24,
                                          math.log(1 / delta))),
        ]
    else:
        raise InvalidParameter('kind', kind, "'chow' or 'shapley'")
    return pd.DataFrame(rows, columns=['parameter', 'formula', 'value'])
