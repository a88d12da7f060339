"""Codes in Hamming graphs whose neighbour sets do not pin them down.

The package builds the classical permutation/product/repetition code
families, verifies which groups fix a code's neighbour set while moving
the code, and runs exhaustive equivalence-pruned searches for such
pairs at small parameters.
"""

from .caps import ResourceCapError
from .hamming import Vertex, distance, sphere, all_vertices
from .perms import Perm
from .autgroup import Automorphism, Group, generate_group, orbit
from .codes import Code, min_distance, covering_radius, neighbour_set, read_code, write_code
from .elusive import ElusiveReport, verify_elusive
from .search import SearchCertificate, search_elusive, enumerate_codes

__version__ = "0.1.0"

__all__ = [
    "ResourceCapError",
    "Vertex",
    "Perm",
    "Automorphism",
    "Group",
    "Code",
    "ElusiveReport",
    "SearchCertificate",
    "distance",
    "sphere",
    "all_vertices",
    "generate_group",
    "orbit",
    "min_distance",
    "covering_radius",
    "neighbour_set",
    "read_code",
    "write_code",
    "verify_elusive",
    "search_elusive",
    "enumerate_codes",
    "__version__",
]
