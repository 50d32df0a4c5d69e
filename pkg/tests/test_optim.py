# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Tests of the linear separability routines used to enumerate juntas

"""

from itertools import product

import numpy as np
import pytest

from powindex.core.cube import cube
from powindex.exceptions import EnumerationCapExceeded, InvalidParameter
from powindex.optim.separability import is_linearly_separable, \
    is_monotone_table, monotone_threshold_tables, realize_threshold_function
from powindex.utils.numerics import JUNTA_LP_CAP


def _realizes(table, weights, theta):
    X = cube(len(weights))
    values = np.where(X @ np.asarray(weights, dtype=float) - theta >= 0, 1, -1)
    return values.tolist() == list(table)


@pytest.mark.parametrize('h, expected', [(1, 4), (2, 14)])
def test_separable_counts(h, expected):
    count = sum(is_linearly_separable(t)
                for t in product((-1, 1), repeat=2 ** h))
    assert count == expected


def test_parity_not_separable():
    xor = (1, -1, -1, 1)
    assert not is_linearly_separable(xor)
    assert not is_linearly_separable(tuple(-v for v in xor))
    assert realize_threshold_function(xor, monotone=False) is None


@pytest.mark.parametrize('table', [
    (-1, -1, -1, 1),    # AND
    (-1, 1, 1, 1),      # OR
    (-1, 1, -1, 1),     # x1
    (1, 1, 1, 1),
    (-1, -1, -1, -1),
    (-1, -1, -1, -1, -1, 1, 1, 1),
])
def test_realize_monotone(table):
    weights, theta = realize_threshold_function(table)
    assert all(w >= 0 for w in weights)
    assert _realizes(table, weights, theta)


def test_realize_signed():
    table = (1, -1, 1, -1)  # -x1
    assert realize_threshold_function(table, monotone=True) is None
    weights, theta = realize_threshold_function(table, monotone=False)
    assert weights[0] < 0
    assert _realizes(table, weights, theta)


def test_realize_no_variables():
    assert realize_threshold_function((1,)) == ((), 0)
    assert realize_threshold_function((-1,)) == ((), 1)


def test_monotone_table():
    assert is_monotone_table((-1, 1, 1, 1))
    assert not is_monotone_table((1, -1, 1, 1))


@pytest.mark.parametrize('h, expected', [(1, 3), (2, 6)])
def test_monotone_threshold_tables(h, expected):
    found = list(monotone_threshold_tables(h))
    assert len(found) == expected
    assert len({t for t, _, _ in found}) == expected
    for table, weights, theta in found:
        assert _realizes(table, weights, theta)


def test_tables_cap():
    with pytest.raises(EnumerationCapExceeded):
        next(monotone_threshold_tables(JUNTA_LP_CAP + 1))


@pytest.mark.parametrize('table', [(1, -1, 1), (1, 0), ()])
def test_bad_table(table):
    with pytest.raises(InvalidParameter):
        is_linearly_separable(table)
