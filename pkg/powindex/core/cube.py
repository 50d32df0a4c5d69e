# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Enumeration of the hypercube {-1,1}^n.

Row r of the enumeration is the string x with x_{j+1} = +1 iff bit j of r is
set. Row 0 is (-1)^n, row 2^n - 1 is 1^n, and the number of +1 entries of a
row is the popcount of its index.

"""

from functools import lru_cache

import numpy as np

from ..exceptions import EnumerationCapExceeded
from ..utils.numerics import CUBE_BLOCK_BITS


def check_cap(n, cap, knob='cap'):
    if n > cap:
        raise EnumerationCapExceeded(n, cap, knob)


def rows_to_strings(rows, n):
    """
    Converts row indices into +/-1 strings

    :param rows: 1D integer array
    :param n:
    :return: (len(rows), n) int8 array
    """
    rows = np.asarray(rows, dtype=np.int64)
    bits = (rows[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return (2 * bits - 1).astype(np.int8)


def strings_to_rows(X):
    """
    Inverse of rows_to_strings

    :param X: (N, n) array of +/-1
    :return: 1D int64 array of row indices
    """
    X = np.atleast_2d(X)
    bits = (X > 0).astype(np.int64)
    return bits @ (1 << np.arange(X.shape[1], dtype=np.int64))


@lru_cache(maxsize=8)
def _cube(n):
    X = rows_to_strings(np.arange(2 ** n, dtype=np.int64), n)
    X.setflags(write=False)
    return X


def cube(n, cap=20):
    """
    The full (2^n, n) table of +/-1 strings, cached and read-only

    :param n:
    :param cap: refuse to materialize larger cubes
    :return:
    """
    check_cap(n, cap)
    return _cube(n)


def iter_cube_blocks(n, block_bits=CUBE_BLOCK_BITS):
    """
    Yields (first_row, X) blocks covering {-1,1}^n in row order, so that
    cubes too large to materialize can still be reduced exactly

    :param n:
    :param block_bits: log2 of the block size
    :return:
    """
    if n <= block_bits:
        yield 0, _cube(n)
        return
    size = 2 ** block_bits
    for start in range(0, 2 ** n, size):
        yield start, rows_to_strings(np.arange(start, start + size), n)


@lru_cache(maxsize=32)
def _popcounts(n):
    rows = np.arange(2 ** n, dtype=np.int64)
    counts = np.zeros(2 ** n, dtype=np.int64)
    for j in range(n):
        counts += (rows >> j) & 1
    counts.setflags(write=False)
    return counts


def popcounts(n, cap=24):
    """
    Number of +1 entries of every row

    :param n:
    :return: read-only int64 array of length 2^n
    """
    check_cap(n, cap)
    return _popcounts(n)


def popcount_block(start, size, n):
    rows = np.arange(start, start + size, dtype=np.int64)
    counts = np.zeros(size, dtype=np.int64)
    for j in range(n):
        counts += (rows >> j) & 1
    return counts


def pbiased_weights(counts, n, p):
    """
    Probability of each string under the p-biased product distribution,
    p^{#1}(1-p)^{#-1}, from the popcounts of the rows

    :param counts: popcounts
    :param n:
    :param p: bias, Pr[x_i = 1]
    :return:
    """
    if p == 0.5:
        return np.full(len(counts), 0.5 ** n)
    log_p, log_q = np.log(p), np.log1p(-p)
    per_count = np.exp(np.arange(n + 1) * log_p
                       + (n - np.arange(n + 1)) * log_q)
    return per_count[counts]
