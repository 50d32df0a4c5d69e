# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Exceptions raised by powindex

"""


class DimensionMismatch(ValueError):
    def __init__(self, expected, got, what='input'):
        self.expected = expected
        self.got = got
        msg = '{} has dimension {}, expected {}'.format(what, got, expected)
        ValueError.__init__(self, msg)


class UnsortedWeights(ValueError):
    def __init__(self, position):
        self.position = position
        msg = 'Weights are not sorted by nonincreasing magnitude ' \
              '(first violation at index {})'.format(position)
        ValueError.__init__(self, msg)


class EnumerationCapExceeded(ValueError):
    def __init__(self, n, cap, knob='cap'):
        self.n = n
        self.cap = cap
        msg = 'n={} exceeds the enumeration cap {}. Use a sampled estimator ' \
              'or raise the `{}` argument'.format(n, cap, knob)
        ValueError.__init__(self, msg)


class InvalidParameter(ValueError):
    def __init__(self, name, value, expected):
        self.name = name
        self.value = value
        msg = 'Invalid {}={!r}: expected {}'.format(name, value, expected)
        ValueError.__init__(self, msg)


class QuadratureError(RuntimeError):
    def __init__(self, message, value=None, abserr=None):
        self.value = value
        self.abserr = abserr
        RuntimeError.__init__(self, 'Quadrature did not converge: '
                                    + str(message))


class RadicandNegative(ValueError):
    def __init__(self, gamma_prime, radicand):
        self.gamma_prime = gamma_prime
        self.radicand = radicand
        msg = 'gamma_prime={} is below the partial tail norm ' \
              '(radicand {})'.format(gamma_prime, radicand)
        ValueError.__init__(self, msg)


class GameFormatError(ValueError):
    def __init__(self, message, lineno=None, colno=None, path=None):
        self.lineno = lineno
        self.colno = colno
        self.path = path
        where = ''
        if path is not None:
            where += str(path)
        if lineno is not None:
            where += ':{}:{}'.format(lineno, colno)
        if where:
            message = '{}: {}'.format(where, message)
        ValueError.__init__(self, message)
