from .base import KripkeModel
from .exceptions import InvalidModelError
from .exceptions import ModelFormatError
from .exceptions import UnknownPropositionError
from .explicit import ExplicitKripke
from .implicit import ImplicitKripke
from .kmv import load_kmv
from .kmv import read_kmv
from .kmv import save_kmv

__all__ = [
    "ExplicitKripke",
    "ImplicitKripke",
    "InvalidModelError",
    "KripkeModel",
    "ModelFormatError",
    "UnknownPropositionError",
    "load_kmv",
    "read_kmv",
    "save_kmv",
]
