"""Undirected simple graphs over prime or abstract vertex labels.

Vertices are either positive prime integers or abstract string tokens.
All iteration is in a fixed canonical order (primes ascending, then tokens
lexicographically), so every operation here is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from sympy import isprime

from .errors import InvalidInput, SizeLimitExceeded

Vertex = Union[int, str]
Edge = tuple  # canonical (u, v) with u < v in label order

CHROMATIC_ORACLE_CAP = 10


def label_key(v: Vertex):
    """Sort key for the canonical label order: primes by value, then tokens."""
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, v)


def canonical_edge(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


def _check_vertex(v: Vertex) -> Vertex:
    if isinstance(v, bool):
        raise InvalidInput(f"invalid vertex label {v!r}")
    if isinstance(v, int):
        if v < 2 or not isprime(v):
            raise InvalidInput(f"integer vertex label {v} is not prime")
        return v
    if isinstance(v, str):
        if not v:
            raise InvalidInput("empty string is not a valid vertex label")
        return v
    raise InvalidInput(f"invalid vertex label {v!r}")


class Graph:
    """Immutable undirected simple graph.

    Edges are stored canonically (smaller endpoint first); no self-loops.
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]] = ()):
        vs = sorted({_check_vertex(v) for v in vertices}, key=label_key)
        vset = set(vs)
        es = set()
        for e in edges:
            u, v = e
            if u not in vset or v not in vset:
                raise InvalidInput(f"edge {e!r} has an endpoint outside the vertex set")
            if u == v:
                raise InvalidInput(f"self-loop at {u!r}")
            es.add(canonical_edge(u, v))
        self._vertices = tuple(vs)
        self._edges = tuple(sorted(es, key=lambda e: (label_key(e[0]), label_key(e[1]))))
        adj = {v: set() for v in vs}
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(adj[v], key=label_key)) for v in vs}

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._adj

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, ())

    def neighbors(self, v: Vertex) -> tuple:
        if v not in self._adj:
            raise InvalidInput(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Graph":
        """Graph with every vertex v replaced by mapping[v] (must be injective)."""
        if len(set(mapping[v] for v in self._vertices)) != len(self._vertices):
            raise InvalidInput("relabeling is not injective on the vertex set")
        return Graph(
            (mapping[v] for v in self._vertices),
            ((mapping[u], mapping[v]) for u, v in self._edges),
        )

    def minus_edge(self, u: Vertex, v: Vertex) -> "Graph":
        """Graph with the edge u-v removed (no-op if absent)."""
        e = canonical_edge(u, v)
        return Graph(self._vertices, (x for x in self._edges if x != e))

    def to_json_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self._vertices],
            "edges": [[str(u), str(v)] for u, v in self._edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_dot(self) -> str:
        lines = ["graph {"]
        in_edge = {u for e in self._edges for u in e}
        for v in self._vertices:
            if v not in in_edge:
                lines.append(f'  "{v}";')
        for u, v in self._edges:
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines)


def parse_label(s: str) -> Vertex:
    """Decode a JSON vertex string: digit strings are prime labels."""
    if s.isdigit():
        n = int(s)
        if not isprime(n):
            raise InvalidInput(f"integer vertex label {n} is not prime")
        return n
    return _check_vertex(s)


def graph_from_json_dict(data: Mapping) -> Graph:
    try:
        vertices = [parse_label(str(s)) for s in data["vertices"]]
        edges = [(parse_label(str(u)), parse_label(str(v))) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"malformed graph JSON: {exc}") from exc
    return Graph(vertices, edges)


def graph_from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(data)


@dataclass(frozen=True)
class Coloring:
    """A color assignment vertex -> {0..k-1}."""

    assignment: Mapping[Vertex, int]
    k: int

    def is_proper(self, g: Graph) -> bool:
        a = self.assignment
        if set(a) != set(g.vertices):
            return False
        if any(not (0 <= c < self.k) for c in a.values()):
            return False
        return all(a[u] != a[v] for u, v in g.edges)

    def color_class(self, c: int) -> tuple:
        return tuple(v for v in sorted(self.assignment, key=label_key) if self.assignment[v] == c)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "assignment": {str(v): c for v, c in self.assignment.items()}}


@dataclass(frozen=True)
class Triangle:
    """Three pairwise adjacent vertices, canonically sorted."""

    vertices: tuple

    def __init__(self, a: Vertex, b: Vertex, c: Vertex):
        vs = tuple(sorted({a, b, c}, key=label_key))
        if len(vs) != 3:
            raise InvalidInput("a triangle needs three distinct vertices")
        object.__setattr__(self, "vertices", vs)

    def is_in(self, g: Graph) -> bool:
        a, b, c = self.vertices
        return g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def complement(g: Graph) -> Graph:
    """Same vertices; edge present iff absent in g."""
    vs = g.vertices
    edges = [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if not g.has_edge(vs[i], vs[j])
    ]
    return Graph(vs, edges)


def induced_subgraph(g: Graph, s: Iterable[Vertex]) -> Graph:
    sub = set(s)
    for v in sub:
        if not g.has_vertex(v):
            raise InvalidInput(f"unknown vertex {v!r}")
    return Graph(sub, ((u, v) for u, v in g.edges if u in sub and v in sub))


def degree(g: Graph, v: Vertex) -> int:
    return g.degree(v)


def triangles(g: Graph) -> list:
    """All 3-cliques, canonically ordered, each reported once."""
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    out = []
    for u, v in g.edges:
        for w in g.neighbors(u):
            if idx[w] > idx[v] and g.has_edge(v, w):
                out.append(Triangle(u, v, w))
    return sorted(out, key=lambda t: tuple(label_key(x) for x in t.vertices))


def _color_order(g: Graph) -> list:
    return sorted(g.vertices, key=lambda v: (-g.degree(v), label_key(v)))


def k_color(
    g: Graph, k: int, pinned: Optional[Mapping[Vertex, int]] = None
) -> Optional[Coloring]:
    """A proper k-coloring extending `pinned`, or None.

    Deterministic backtracking: vertices by descending degree (ties by label
    order); a vertex may only open one color beyond those already in use,
    which prunes color permutations without losing completeness.
    """
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    pinned = dict(pinned or {})
    for v, c in pinned.items():
        if not g.has_vertex(v):
            raise InvalidInput(f"pinned vertex {v!r} not in graph")
        if not (0 <= c < k):
            return None
    if not g.vertices:
        return Coloring({}, k)
    if k == 0:
        return None

    order = [v for v in _color_order(g) if v not in pinned]
    assign = dict(pinned)
    if any(assign.get(u) is not None and assign.get(u) == assign.get(v) for u, v in g.edges):
        return None
    max_pinned = max(pinned.values(), default=-1)

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {assign[w] for w in g.neighbors(v) if w in assign}
        limit = min(k, used + 1)
        for c in range(limit):
            if c in taken:
                continue
            assign[v] = c
            if extend(i + 1, max(used, c + 1)):
                return True
            del assign[v]
        return False

    if extend(0, max_pinned + 1):
        return Coloring(dict(assign), k)
    return None


def chromatic_number_oracle(g: Graph) -> int:
    """Exact chromatic number by exhaustive search; hard cap of 10 vertices.

    Enumerates all canonical color assignments (each vertex may open at most
    one new color), which covers every coloring up to color permutation.
    Intentionally ignores the degree heuristics used by k_color so the two
    stay independent.
    """
    vs = g.vertices
    n = len(vs)
    if n > CHROMATIC_ORACLE_CAP:
        raise SizeLimitExceeded(
            f"chromatic oracle capped at {CHROMATIC_ORACLE_CAP} vertices, got {n}"
        )
    if n == 0:
        return 0

    def colorable(k: int) -> bool:
        assign = {}

        def rec(i: int, used: int) -> bool:
            if i == n:
                return True
            v = vs[i]
            for c in range(min(k, used + 1)):
                if any(assign.get(w) == c for w in g.neighbors(v)):
                    continue
                assign[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                del assign[v]
            return False

        return rec(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def constrained_3color(gbar: Graph, c: Vertex, excluded: Sequence[Vertex]) -> Optional[Coloring]:
    """A proper 3-coloring of gbar where all neighbors of c except the two
    excluded vertices share one color class; None if impossible.

    Convention in the returned coloring: the shared neighbor class is color 1
    and c itself is color 2 (harmless, since color classes are symmetric).
    """
    a, b = excluded
    for v in (c, a, b):
        if not gbar.has_vertex(v):
            raise InvalidInput(f"unknown vertex {v!r}")
    constrained = [v for v in gbar.neighbors(c) if v not in (a, b)]
    pinned = {v: 1 for v in constrained}
    pinned[c] = 2
    return k_color(gbar, 3, pinned=pinned)
