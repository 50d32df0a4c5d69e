from .separability import *
