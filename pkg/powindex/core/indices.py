# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Full and partial vectors of power indices.

Shapley indices use the [0, 2] normalization (difference of +/-1 values);
the classical Shapley-Shubik index is half of it.

"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from ..exceptions import DimensionMismatch, InvalidParameter


class IndexKind(Enum):
    CHOW = 'chow'
    CHOW_P = 'chow_p'
    SHAPLEY = 'shapley'
    CORR_P = 'corr_p'
    HERMITE = 'hermite'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter('kind', value,
                                   'one of ' + ', '.join(k.value for k in cls))


def _check_p(p):
    if p is not None and not 0 < p < 1:
        raise InvalidParameter('p', p, 'a bias in (0, 1)')


@dataclass(frozen=True)
class IndexVector:
    """
    Indices 1..n of a function, plus the degree-0 slot (E[f] for the
    Fourier-type kinds) when it is known
    """
    kind: IndexKind
    n: int
    values: tuple
    p: float = None
    constant: float = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', IndexKind.parse(self.kind))
        values = tuple(float(v) for v in self.values)
        if len(values) != self.n:
            raise DimensionMismatch(self.n, len(values), 'index vector')
        _check_p(self.p)
        object.__setattr__(self, 'values', values)
        if self.constant is not None:
            object.__setattr__(self, 'constant', float(self.constant))

    def __getitem__(self, i):
        if i == 0:
            if self.constant is None:
                raise KeyError('index 0 is not set for this {} vector'
                               .format(self.kind.value))
            return self.constant
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.values[i - 1]

    def __len__(self):
        return self.n

    def as_array(self):
        return np.array(self.values)

    def total(self):
        return math.fsum(self.values)

    def partial(self, indices):
        """
        Restriction to a subset S of {0..n}

        :param indices:
        :return: PartialIndexVector
        """
        return PartialIndexVector(self.kind, self.n,
                                  tuple((i, self[i]) for i in indices),
                                  p=self.p)

    def to_dict(self):
        obj = {'kind': self.kind.value, 'n': self.n,
               'values': list(self.values)}
        if self.p is not None:
            obj['p'] = self.p
        if self.constant is not None:
            obj['constant'] = self.constant
        return obj

    @classmethod
    def from_dict(cls, obj):
        return cls(kind=obj['kind'], n=int(obj['n']), values=obj['values'],
                   p=obj.get('p'), constant=obj.get('constant'))

    def to_frame(self):
        """ index,value table, row 0 included when the constant is known """
        index = list(range(1, self.n + 1))
        values = list(self.values)
        if self.constant is not None:
            index = [0] + index
            values = [self.constant] + values
        return pd.DataFrame({'index': index, 'value': values})


@dataclass(frozen=True)
class PartialIndexVector:
    """
    Values of a power index on a subset S of {0..n}: the input of the
    reconstruction problems
    """
    kind: IndexKind
    n: int
    entries: tuple
    p: float = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', IndexKind.parse(self.kind))
        if isinstance(self.entries, dict):
            entries = self.entries.items()
        else:
            entries = self.entries
        entries = tuple(sorted((int(i), float(v)) for i, v in entries))
        indices = [i for i, _ in entries]
        if len(set(indices)) != len(indices):
            raise InvalidParameter('indices', indices, 'distinct indices')
        if any(not 0 <= i <= self.n for i in indices):
            raise InvalidParameter('indices', indices,
                                   'indices within 0..{}'.format(self.n))
        _check_p(self.p)
        object.__setattr__(self, 'entries', entries)

    @property
    def indices(self):
        return tuple(i for i, _ in self.entries)

    @property
    def values(self):
        return tuple(v for _, v in self.entries)

    def as_dict(self):
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, i):
        return i in self.as_dict()

    def __getitem__(self, i):
        return self.as_dict()[i]

    def restrict(self, indices):
        keep = set(indices)
        return PartialIndexVector(self.kind, self.n,
                                  tuple((i, v) for i, v in self.entries
                                        if i in keep),
                                  p=self.p)

    def degree_one(self):
        """ Entries with index >= 1 """
        return self.restrict(i for i in self.indices if i >= 1)

    def to_dict(self):
        obj = {'kind': self.kind.value, 'n': self.n,
               'indices': list(self.indices), 'values': list(self.values)}
        if self.p is not None:
            obj['p'] = self.p
        return obj

    @classmethod
    def from_dict(cls, obj):
        indices, values = obj['indices'], obj['values']
        if len(indices) != len(values):
            raise DimensionMismatch(len(indices), len(values),
                                    'partial index values')
        return cls(kind=obj['kind'], n=int(obj['n']),
                   entries=tuple(zip(indices, values)), p=obj.get('p'))

    def to_frame(self):
        return pd.DataFrame({'index': list(self.indices),
                             'value': list(self.values)})
