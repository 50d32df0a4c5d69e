# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

JSON and CSV serialization of games, index vectors and results
"""

import json

import numpy

from ..core.indices import IndexVector, PartialIndexVector
from ..core.ltf import ltf_from_dict
from ..exceptions import DimensionMismatch, GameFormatError, InvalidParameter


class MyEncoder(json.JSONEncoder):
    """
    We define an encoder that takes care of the serialization of numpy types,
    which are not handled by json by default
    """
    def default(self, obj):
        if isinstance(obj, numpy.integer):
            return int(obj)
        elif isinstance(obj, numpy.floating):
            return float(obj)
        elif isinstance(obj, numpy.ndarray):
            return obj.tolist()
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        else:
            return super(MyEncoder, self).default(obj)


def check_json_extension(filepath):
    if not str(filepath).endswith('.json'):
        filepath = str(filepath) + '.json'
    return filepath


def read_json(filepath):
    """
    Parses a JSON file; syntax errors are reported with their line and column

    :param filepath:
    :return:
    """
    with open(filepath, 'r') as fid:
        try:
            return json.load(fid)
        except json.JSONDecodeError as e:
            raise GameFormatError(e.msg, lineno=e.lineno, colno=e.colno,
                                  path=filepath)


def write_json(obj, filepath):
    with open(filepath, 'w') as fid:
        json.dump(obj, fid, cls=MyEncoder, indent=2)


def json_dumps(obj):
    """
    Returns a JSON dump as a string

    :param obj: a dict, or an object with a to_dict method
    :return:
    """
    return json.dumps(obj, cls=MyEncoder)


def _check_mapping(obj, filepath):
    if not isinstance(obj, dict):
        raise GameFormatError('expected a JSON object, got {}'
                              .format(type(obj).__name__), path=filepath)


def load_game(filepath):
    """
    Reads a game file: {"weights": [...], "quota": q} or
    {"weights": [...], "threshold": t, "encoding": "pm1"}

    :param filepath:
    :return: WeightedLTF
    """
    obj = read_json(filepath)
    _check_mapping(obj, filepath)
    try:
        return ltf_from_dict(obj)
    except (KeyError, TypeError, InvalidParameter) as e:
        raise GameFormatError('invalid game: {}'.format(e), path=filepath)


def save_game(f, filepath):
    write_json(f.to_dict(), check_json_extension(filepath))


def index_vector_from_dict(obj):
    """
    A PartialIndexVector when the object lists "indices", an IndexVector
    otherwise
    """
    if 'indices' in obj:
        return PartialIndexVector.from_dict(obj)
    return IndexVector.from_dict(obj)


def load_index_vector(filepath):
    """
    :param filepath: IndexVector or PartialIndexVector JSON
    :return:
    """
    obj = read_json(filepath)
    _check_mapping(obj, filepath)
    try:
        return index_vector_from_dict(obj)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, GameFormatError):
            raise
        raise GameFormatError('invalid index vector: {}'.format(e),
                              path=filepath)


def save_index_vector(vector, filepath):
    """
    Writes an index vector as JSON, or as an index,value CSV table when the
    path ends with .csv

    :param vector: IndexVector or PartialIndexVector
    :param filepath:
    :return: the path written
    """
    if str(filepath).endswith('.csv'):
        vector.to_frame().to_csv(filepath, index=False)
        return filepath
    filepath = check_json_extension(filepath)
    write_json(vector.to_dict(), filepath)
    return filepath


def save_result(result, filepath):
    filepath = check_json_extension(filepath)
    write_json(result.to_dict(), filepath)
    return filepath


def mask_index_vector(vector, indices):
    """
    Restriction of a full vector to a subset S, the input of a partial
    reconstruction

    :param vector: IndexVector
    :param indices: subset of {0..n} (index 0 needs the constant)
    :return: PartialIndexVector
    """
    indices = sorted(set(indices))
    if indices and (indices[0] < 0 or indices[-1] > vector.n):
        raise DimensionMismatch(vector.n, max(indices), 'mask index')
    return vector.partial(indices)
