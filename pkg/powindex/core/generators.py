# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Standard and random games

"""

import numpy as np

from ..exceptions import InvalidParameter
from .ltf import GameSpec, WeightedLTF, from_game


def majority(n):
    """ sign(x_1 + ... + x_n), ties count as +1 """
    return WeightedLTF((1.,) * n, 0.)


def dictator(n, i=1):
    """ x_i on n variables """
    if not 1 <= i <= n:
        raise InvalidParameter('i', i, 'a coordinate within 1..{}'.format(n))
    weights = [0.] * n
    weights[i - 1] = 1.
    return WeightedLTF(tuple(weights), 0.)


def eu_1957():
    """ Council of the EEC, 1957: France, Germany, Italy, Belgium, the
    Netherlands and Luxembourg """
    return from_game(GameSpec((4, 4, 4, 2, 2, 1), 12))


def random_monotone_ltf(n, rng, step=None, eta=None, sort=False):
    """
    Random monotone LTF: uniform weights in (0, 1], threshold uniform in
    +/- (1 - eta) |w|_1

    :param n:
    :param rng: numpy Generator
    :param step: if given, weights and threshold are rounded to multiples of
        step (weights stay >= step)
    :param eta: restriction level, 0 by default
    :param sort: sort the weights by nonincreasing value
    :return: WeightedLTF
    """
    eta = 0. if eta is None else eta
    if not 0 <= eta <= 1:
        raise InvalidParameter('eta', eta, 'a real in [0, 1]')
    weights = 1. - rng.random(n)
    if sort:
        weights = np.sort(weights)[::-1]
    bound = (1 - eta) * weights.sum()
    theta = rng.uniform(-bound, bound)
    if step is not None:
        weights = np.maximum(np.round(weights / step), 1) * step
        bound = (1 - eta) * weights.sum()
        theta = np.clip(np.round(theta / step) * step, -bound, bound)
    return WeightedLTF(tuple(float(w) for w in weights), float(theta))


def random_regular_ltf(n, rng, low=0.5, eta=0.5):
    """ Weights uniform in [low, 1]: regularity about 1/sqrt(n) """
    weights = rng.uniform(low, 1., n)
    bound = (1 - eta) * weights.sum()
    return WeightedLTF(tuple(float(w) for w in weights),
                       float(rng.uniform(-bound, bound)))
