# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Linear separability of truth tables, by linear and integer programming.

A truth table on h variables is a +/-1 sequence of length 2^h indexed like
powindex.core.cube (bit j of the row is x_{j+1} = +1).

"""

from itertools import product

import numpy as np
from optlang import Constraint, Model, Objective, Variable
from optlang.interface import OPTIMAL
from sympy import Add

from ..core.cube import check_cap, cube
from ..exceptions import InvalidParameter
from ..utils.numerics import JUNTA_LP_CAP

# Largest integer weight magnitude tried when realizing a truth table
DEFAULT_WEIGHT_BOUND = 64


def symbol_sum(variables):
    """ Sum of sympy terms in one Add call """
    return Add(*variables)


def _check_table(truth_table):
    table = np.asarray(truth_table).astype(int)
    h = int(round(np.log2(len(table)))) if len(table) else -1
    if h < 0 or 2 ** h != len(table) or not np.all(np.abs(table) == 1):
        raise InvalidParameter('truth_table', truth_table,
                               'a +/-1 sequence of length 2^h')
    return table, h


def _build_problem(table, h, integer, monotone, bound, name):
    model = Model(name=name)
    var_type = 'integer' if integer else 'continuous'
    lower = 0 if monotone else -bound
    weights = [Variable('w_{}'.format(i + 1), lb=lower, ub=bound,
                        type=var_type) for i in range(h)]
    theta = Variable('theta', lb=-(h * bound + 1), ub=h * bound + 1,
                     type=var_type)
    magnitudes = []
    model.add(weights + [theta])
    if not monotone:
        # |w_i| through auxiliary upper bounds
        for i, w in enumerate(weights):
            a = Variable('abs_w_{}'.format(i + 1), lb=0, ub=bound,
                         type=var_type)
            model.add([a])
            model.add([Constraint(a - w, lb=0, name='abs_pos_{}'.format(i)),
                       Constraint(a + w, lb=0, name='abs_neg_{}'.format(i))])
            magnitudes.append(a)
    else:
        magnitudes = weights

    constraints = []
    for r, (x, y) in enumerate(zip(cube(h), table)):
        margin = symbol_sum([int(x_i) * w for x_i, w in zip(x, weights)]
                            + [-theta])
        if y > 0:
            constraints.append(Constraint(margin, lb=0,
                                          name='row_{}'.format(r)))
        else:
            constraints.append(Constraint(margin, ub=-1,
                                          name='row_{}'.format(r)))
    model.add(constraints)
    model.objective = Objective(symbol_sum(magnitudes), direction='min')
    return model, weights, theta


def is_linearly_separable(truth_table):
    """
    True iff some real (w, theta) has sign(w.x - theta) equal to the table,
    signed weights allowed

    :param truth_table: +/-1 sequence of length 2^h
    :return:
    """
    table, h = _check_table(truth_table)
    if np.all(table == table[0]):
        return True
    model, _, _ = _build_problem(table, h, integer=False, monotone=False,
                                 bound=2 ** (2 * h + 2), name='separability')
    return model.optimize() == OPTIMAL


def realize_threshold_function(truth_table, monotone=True,
                               bound=DEFAULT_WEIGHT_BOUND):
    """
    Integer weights of least l1 norm and an integer threshold realizing the
    table with the sign(0) = +1 convention, or None if the table is not a
    threshold function within the bound

    :param truth_table: +/-1 sequence of length 2^h
    :param monotone: restrict to nonnegative weights
    :param bound: largest weight magnitude
    :return: (weights tuple, threshold) or None
    """
    table, h = _check_table(truth_table)
    if h == 0:
        return (), (0 if table[0] > 0 else 1)
    model, weights, theta = _build_problem(table, h, integer=True,
                                           monotone=monotone, bound=bound,
                                           name='realization')
    if model.optimize() != OPTIMAL:
        return None
    return (tuple(int(round(w.primal)) for w in weights),
            int(round(theta.primal)))


def is_monotone_table(truth_table):
    """ f(x) <= f(y) whenever x <= y coordinatewise """
    table, h = _check_table(truth_table)
    rows = np.arange(len(table))
    for j in range(h):
        low = rows[(rows >> j) & 1 == 0]
        if np.any(table[low] > table[low | (1 << j)]):
            return False
    return True


def monotone_threshold_tables(h):
    """
    All monotone threshold functions on h variables, as (truth table,
    weights, threshold), in the lexicographic order of the tables read as
    -1 < +1 sequences

    :param h: at most JUNTA_LP_CAP
    :return: generator
    """
    check_cap(h, JUNTA_LP_CAP, 'method')
    for values in product((-1, 1), repeat=2 ** h):
        if not is_monotone_table(values):
            continue
        realization = realize_threshold_function(values, monotone=True)
        if realization is not None:
            yield (values,) + realization
