"""Prime graphs of finite groups: classification with certificates,
witness constructions, and exact verification against group enumeration
and character-table data."""

from .classify import Family, Verdict, classify, fixture
from .construct import construct, dirichlet_prime, eval_prime_graph, klein_module
from .graphs import Graph, complement, graph_from_json, k_color, triangles
from .groups import builtin, order_spectrum, prime_graph
from .realize import realize

__all__ = [
    "Family",
    "Verdict",
    "Graph",
    "builtin",
    "classify",
    "complement",
    "construct",
    "dirichlet_prime",
    "eval_prime_graph",
    "fixture",
    "graph_from_json",
    "k_color",
    "klein_module",
    "order_spectrum",
    "prime_graph",
    "realize",
    "triangles",
]
