"""Matroids given by circuits, their paintings over small fields and partial
fields, binary characterizations, minor search and graph signings."""
from .errors import MatroidError, TooLarge
from .fields import GF2, GF3, GF4, REGULAR, SIXTH_ROOT
from .graphs import DirectedGraph
from .linrep import Representation
from .matroid import Matroid, matroid_from_circuits
from .painting import Painting, find_painting, verify_painting

__all__ = [
    "GF2", "GF3", "GF4", "REGULAR", "SIXTH_ROOT",
    "DirectedGraph", "Matroid", "MatroidError", "Painting", "Representation", "TooLarge",
    "find_painting", "matroid_from_circuits", "verify_painting",
]
