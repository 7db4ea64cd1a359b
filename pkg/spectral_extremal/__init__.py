# flake8: noqa
"""
Spectral-radius-extremal connected nonregular graphs with bounded maximum degree:
the graph type and Perron solver, degree-preserving switchings, the extremal
constructions, an exhaustive oracle for small orders, the asymptotic checks of
Delta - lambda_1 and the certificates for the forbidden substructures.
"""

try:
    from ._version import __version__
except ImportError:
    # source tree without an install
    __version__ = "0.0.0.dev0"

from .errors import (
    CapabilityError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    GraphInputError,
    SpectralExtremalError,
)
from .graph import Graph, graph_from_edges, from_graph6, to_graph6, read_graph, write_graph
from .spectral import PerronData, perron, spectral_radius
from .constructions import extremal_graph, h_family, g_family, family_spec
from .oracle import enumerate_extremal, verify_structure_lemmas
