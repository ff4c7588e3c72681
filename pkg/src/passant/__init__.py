"""Passant-line / internal-point incidence for a conic in PG(2,q), q odd.

The package builds the plane, the conic, and the bipartite incidence
between internal points and passant lines, then verifies the structure of
that matrix over GF(2): its rank, the block decomposition of the
underlying PSL(2,q)-module, and the ordinary character theory that
predicts both.
"""

from .gfq import GF, Fq, binary_splitting_field
from .plane import ConicPlane, verify_plane
from .group import ConicGroup
from .incidence import IncidenceSystem

__version__ = "0.1.0"

__all__ = [
    "GF",
    "Fq",
    "binary_splitting_field",
    "ConicPlane",
    "verify_plane",
    "ConicGroup",
    "IncidenceSystem",
    "__version__",
]
