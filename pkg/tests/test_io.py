# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Tests the I/O functionalities of powindex

"""

import json
import os

import numpy as np
import pandas as pd
import pytest

from settings import data_directory, eu_game, maj3

from powindex.analysis.exact import chow_exact, shapley_exact
from powindex.core.indices import IndexKind, PartialIndexVector
from powindex.exceptions import DimensionMismatch, GameFormatError
from powindex.io.json import json_dumps, load_game, load_index_vector, \
    mask_index_vector, read_json, save_game, save_index_vector
from powindex.io.manifest import RunManifest, file_digest, load_manifest

#############
#    I/O    #
#############


def test_read_write_game(tmp_path):
    save_game(eu_game, str(tmp_path / 'eu'))
    path = str(tmp_path / 'eu.json')
    assert os.path.exists(path)
    assert load_game(path).truth_table().tolist() \
        == eu_game.truth_table().tolist()


def test_game_quota_format(tmp_path):
    path = tmp_path / 'even.json'
    path.write_text(json.dumps({'weights': [49, 49, 2], 'quota': 51}))
    f = load_game(str(path))
    assert f.weights == (49., 49., 2.)
    assert f.threshold == 2.


def test_shipped_games():
    f = load_game(os.path.join(data_directory, 'eu_1957.json'))
    assert f.truth_table().tolist() == eu_game.truth_table().tolist()
    g = load_game(os.path.join(data_directory, 'maj3.json'))
    assert g.truth_table().tolist() == maj3.truth_table().tolist()


def test_malformed_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{\n  "weights": [1, 2,\n  "quota": 2\n}\n')
    with pytest.raises(GameFormatError) as excinfo:
        read_json(str(path))
    assert excinfo.value.lineno == 3
    assert excinfo.value.path == str(path)
    assert ':3:' in str(excinfo.value)


@pytest.mark.parametrize('obj', [
    [1, 2, 3],
    {'weights': [1, 1]},
    {'weights': [1, -1], 'quota': 1},
    {'weights': [1, 1], 'threshold': 0, 'encoding': '01'},
])
def test_invalid_game(tmp_path, obj):
    path = tmp_path / 'game.json'
    path.write_text(json.dumps(obj))
    with pytest.raises(GameFormatError):
        load_game(str(path))


def test_read_write_index_vector(tmp_path):
    vector = chow_exact(maj3)
    path = save_index_vector(vector, str(tmp_path / 'chow'))
    loaded = load_index_vector(path)
    assert loaded.kind is IndexKind.CHOW
    assert loaded.values == vector.values
    assert loaded.constant == vector.constant

    partial = mask_index_vector(vector, (0, 2))
    path = save_index_vector(partial, str(tmp_path / 'partial.json'))
    loaded = load_index_vector(path)
    assert isinstance(loaded, PartialIndexVector)
    assert loaded.as_dict() == {0: 0., 2: 0.5}


def test_index_vector_csv(tmp_path):
    path = str(tmp_path / 'shapley.csv')
    save_index_vector(shapley_exact(eu_game), path)
    with open(path) as fid:
        assert fid.readline().strip() == 'index,value'
    frame = pd.read_csv(path)
    assert frame['index'].tolist() == [1, 2, 3, 4, 5, 6]
    assert frame['value'].iloc[-1] == 0.


def test_invalid_index_vector(tmp_path):
    path = tmp_path / 'vector.json'
    path.write_text(json.dumps({'kind': 'chow', 'n': 3,
                                'indices': [1, 2], 'values': [0.5]}))
    with pytest.raises(GameFormatError):
        load_index_vector(str(path))
    path.write_text(json.dumps({'kind': 'banzhaf', 'n': 1, 'values': [1.]}))
    with pytest.raises(GameFormatError):
        load_index_vector(str(path))


def test_mask_index_vector():
    vector = shapley_exact(eu_game)
    partial = mask_index_vector(vector, [6, 1, 1])
    assert partial.indices == (1, 6)
    assert partial[6] == 0.
    with pytest.raises(DimensionMismatch):
        mask_index_vector(vector, [7])


def test_json_dumps_numpy():
    text = json_dumps({'a': np.int64(3), 'b': np.arange(2),
                       'ltf': maj3})
    obj = json.loads(text)
    assert obj['a'] == 3 and obj['b'] == [0, 1]
    assert obj['ltf']['encoding'] == 'pm1'


def test_manifest(tmp_path):
    game = tmp_path / 'game.json'
    save_game(maj3, str(game))
    manifest = RunManifest(command=['indices', str(game)], seed=3,
                           config={'eps': 0.2})
    manifest.add_input(str(game))
    manifest.outputs.append('out.json')
    path = manifest.save(str(tmp_path / 'manifest'))

    loaded = load_manifest(path)
    assert loaded == manifest
    assert loaded.inputs[str(game)] == file_digest(str(game))
    assert len(file_digest(str(game))) == 64
