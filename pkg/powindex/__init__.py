# -*- coding: utf-8 -*-
""" Power indices of linear threshold functions, and their partial inverses

.. moduleauthor:: powindex team


"""

from .core.ltf import WeightedLTF, GameSpec, from_game, to_game
from .core.indices import IndexKind, IndexVector, PartialIndexVector
from .inverse import *

__version__ = '0.1.0'
