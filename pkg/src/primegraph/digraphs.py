"""Orientations of prime-graph complements and the I/D/O machinery.

A "directed 3-path" here is any chain of three arcs u -> v -> w -> x with
u != w and v != x; the endpoints u and x may coincide (so a directed
triangle counts). With this reading, an orientation admits no such chain
iff the base graph is 3-colorable, and the sink/source/double labeling of
a chain-free orientation is always a proper 3-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ContractViolation, InvalidInput, SizeLimitExceeded
from .graphs import Coloring, Graph, Vertex, k_color, label_key

# Color indices for the three classes, ordered O < D < I.
CLASS_O, CLASS_D, CLASS_I = 0, 1, 2
CLASS_NAMES = {CLASS_O: "O", CLASS_D: "D", CLASS_I: "I"}

ORIENTATION_SEARCH_VERTEX_CAP = 12


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of a base graph (one arc per edge)."""

    base: Graph
    arcs: tuple  # (tail, head) pairs, in base edge order

    def __post_init__(self):
        edges = set(self.base.edges)
        seen = set()
        for tail, head in self.arcs:
            e = (tail, head) if (tail, head) in edges else (head, tail)
            if e not in edges:
                raise InvalidInput(f"arc {tail!r}->{head!r} is not over a base edge")
            if e in seen:
                raise InvalidInput(f"edge {e!r} directed twice")
            seen.add(e)
        if len(seen) != len(edges):
            raise InvalidInput("every base edge needs exactly one arc")

    def out_neighbors(self, v: Vertex) -> tuple:
        return tuple(h for t, h in self.arcs if t == v)

    def in_neighbors(self, v: Vertex) -> tuple:
        return tuple(t for t, h in self.arcs if h == v)

    def to_dot(self) -> str:
        lines = ["digraph {"]
        in_arc = {x for a in self.arcs for x in a}
        for v in self.base.vertices:
            if v not in in_arc:
                lines.append(f'  "{v}";')
        for t, h in self.arcs:
            lines.append(f'  "{t}" -> "{h}";')
        lines.append("}")
        return "\n".join(lines)


def orient_by_coloring(gbar: Graph, coloring: Coloring) -> Orientation:
    """Direct every edge from the lower color class to the higher.

    Color indices are read as the class order O < D < I, so arcs run
    O -> D, O -> I and D -> I.
    """
    if coloring.k != 3 or not coloring.is_proper(gbar):
        raise InvalidInput("need a proper 3-coloring of the base graph")
    a = coloring.assignment
    arcs = tuple((u, v) if a[u] < a[v] else (v, u) for u, v in gbar.edges)
    return Orientation(gbar, arcs)


def directed_3path(o: Orientation) -> Optional[tuple]:
    """Some chain of three arcs, or None; deterministic.

    The returned 4-tuple (u, v, w, x) may have u == x (closed chain).
    """
    out = {v: o.out_neighbors(v) for v in o.base.vertices}
    for v in o.base.vertices:
        for w in out[v]:
            for u in o.in_neighbors(v):
                if u == w:
                    continue
                for x in out[w]:
                    if x != v:
                        return (u, v, w, x)
    return None


def ido_coloring(o: Orientation) -> Coloring:
    """Label sinks I, sources O and in-between vertices D.

    Vertices with zero out-degree (including isolated ones) get I; zero
    in-degree with outgoing arcs gets O; everything else D. Requires an
    orientation without directed 3-paths, and then the result is a proper
    3-coloring of the base graph.
    """
    chain = directed_3path(o)
    if chain is not None:
        raise ContractViolation(f"orientation has a directed 3-path {chain}")
    outdeg = {v: 0 for v in o.base.vertices}
    indeg = {v: 0 for v in o.base.vertices}
    for t, h in o.arcs:
        outdeg[t] += 1
        indeg[h] += 1
    assign = {}
    for v in o.base.vertices:
        if outdeg[v] == 0:
            assign[v] = CLASS_I
        elif indeg[v] == 0:
            assign[v] = CLASS_O
        else:
            assign[v] = CLASS_D
    return Coloring(assign, 3)


def orientation_without_3paths(gbar: Graph) -> Optional[Orientation]:
    """An orientation free of directed 3-paths, or None.

    Present iff gbar is 3-colorable: derived from a 3-coloring, which is
    complete by the Gallai-Hasse-Roy-Vitaver correspondence.
    """
    coloring = k_color(gbar, 3)
    if coloring is None:
        return None
    return orient_by_coloring(gbar, coloring)


def exhaustive_orientation_search(gbar: Graph) -> Optional[Orientation]:
    """Brute-force oracle: try all 2^|E| orientations.

    Only for cross-checking orientation_without_3paths in tests; capped.
    """
    n = len(gbar.vertices)
    if n > ORIENTATION_SEARCH_VERTEX_CAP:
        raise SizeLimitExceeded(
            f"orientation search capped at {ORIENTATION_SEARCH_VERTEX_CAP} vertices, got {n}"
        )
    edges = gbar.edges
    for mask in range(1 << len(edges)):
        arcs = tuple(
            (u, v) if mask >> i & 1 == 0 else (v, u) for i, (u, v) in enumerate(edges)
        )
        o = Orientation(gbar, arcs)
        if directed_3path(o) is None:
            return o
    return None
