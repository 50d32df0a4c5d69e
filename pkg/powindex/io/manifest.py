# -*- coding: utf-8 -*-
"""
.. module:: powindex
   :platform: Unix, Windows
   :synopsis: Power indices of linear threshold functions

.. moduleauthor:: powindex team

Run manifests: what a command was run with, and what it produced
"""

import hashlib
from dataclasses import asdict, dataclass, field

from .json import check_json_extension, read_json, write_json


def file_digest(filepath):
    """ sha256 of a file, hex encoded """
    sha = hashlib.sha256()
    with open(filepath, 'rb') as fid:
        for block in iter(lambda: fid.read(1 << 16), b''):
            sha.update(block)
    return sha.hexdigest()


@dataclass
class RunManifest:
    command: list
    seed: int = None
    config: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    outputs: list = field(default_factory=list)
    wall_time: float = None

    def add_input(self, filepath):
        self.inputs[str(filepath)] = file_digest(filepath)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, obj):
        return cls(**obj)

    def save(self, filepath):
        filepath = check_json_extension(filepath)
        write_json(self.to_dict(), filepath)
        return filepath


def load_manifest(filepath):
    return RunManifest.from_dict(read_json(check_json_extension(filepath)))
