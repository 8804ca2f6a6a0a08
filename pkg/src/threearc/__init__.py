"""3-arc graphs of digraphs, exact colouring, and clique-minor certificates."""

from .coloring import Coloring, chromatic_number, critical_subgraph, three_arc_chromatic_index
from .errors import ExtractionIncomplete, ThreeArcError
from .extractor import ExtractionResult, extract_minor
from .graph_core import Arc, Digraph, Graph, biorient, build_digraph, remove_redundant
from .minors import MinorCertificate, find_clique_minor, hadwiger_exact, verify_certificate
from .nets import NetCertificate, NetSpec, build_net, tournament_minor
from .three_arc import ThreeArcGraph, three_arc_graph

__all__ = [
    "Arc", "Coloring", "Digraph", "ExtractionIncomplete", "ExtractionResult", "Graph",
    "MinorCertificate", "NetCertificate", "NetSpec", "ThreeArcError", "ThreeArcGraph",
    "biorient", "build_digraph", "build_net", "chromatic_number", "critical_subgraph",
    "extract_minor", "find_clique_minor", "hadwiger_exact", "remove_redundant",
    "three_arc_chromatic_index", "three_arc_graph", "tournament_minor", "verify_certificate",
]
