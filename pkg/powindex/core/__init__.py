from .ltf import *
from .indices import *
