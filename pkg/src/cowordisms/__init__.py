"""Word cobordisms and the grammar formalisms built on them."""

from .core import Boundary, Multiword, Word, edge, word
from .category import Cowordism, compose, identity, symmetry, tensor

__all__ = [
    "Boundary",
    "Multiword",
    "Word",
    "Cowordism",
    "compose",
    "identity",
    "symmetry",
    "tensor",
    "edge",
    "word",
]
