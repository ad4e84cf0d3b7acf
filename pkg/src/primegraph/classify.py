"""Decision procedures for the per-family prime graph classifications.

Each family of groups admits a graph-theoretic characterization of its
prime graphs, phrased on the complement: plain 3-colorability plus
triangle-freeness, an isolated triangle allowance, or a distinguished
triangle whose hub vertex may reach the rest of the graph subject to a
monochromatic-neighbor coloring condition. classify() decides the
condition and returns a certificate or a concrete refutation witness.

Abstract-labeled graphs are classified up to isomorphism; prime-labeled
vertices appearing in a triangle must coincide with the family's
distinguished primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InvalidInput, NotApplicable
from .graphs import (
    Graph,
    Vertex,
    complement,
    constrained_3color,
    k_color,
    label_key,
    triangles,
)


class Condition(Enum):
    TRIANGLE_FREE = "triangle_free"
    ISOLATED_TRIANGLE = "isolated_triangle"
    HUB_TRIANGLE = "hub_triangle"


class Family(Enum):
    """Group families with classified prime graphs.

    The value tuple: CLI name, distinguished complement triangle (or None),
    condition kind, hub prime for the two-case families, and the edge whose
    removal already forces the solvable condition (diagnostic check).
    """

    SOLVABLE = ("solvable", None, Condition.TRIANGLE_FREE, None, None)
    PSL27 = ("psl27", (2, 3, 7), Condition.HUB_TRIANGLE, 7, (2, 7))
    U33 = ("u33", (2, 3, 7), Condition.TRIANGLE_FREE, None, None)
    A6 = ("a6", (2, 3, 5), Condition.ISOLATED_TRIANGLE, None, (3, 5))
    U42 = ("u42", (2, 3, 5), Condition.TRIANGLE_FREE, None, None)
    PSL28 = ("psl28", (2, 3, 7), Condition.ISOLATED_TRIANGLE, None, (3, 7))
    PSL33 = ("psl33", (2, 3, 13), Condition.TRIANGLE_FREE, None, None)
    PSL217 = ("psl217", (2, 3, 17), Condition.HUB_TRIANGLE, 17, (3, 17))
    MULTI = ("multi", None, Condition.TRIANGLE_FREE, None, None)

    @property
    def cli_name(self) -> str:
        return self.value[0]

    @property
    def triple(self) -> Optional[tuple]:
        return self.value[1]

    @property
    def condition(self) -> Condition:
        return self.value[2]

    @property
    def hub_prime(self) -> Optional[int]:
        return self.value[3]

    @property
    def removal_edge(self) -> Optional[tuple]:
        return self.value[4]

    @property
    def group_name(self) -> Optional[str]:
        return {
            Family.PSL27: "PSL(2,7)",
            Family.U33: "U3(3)",
            Family.A6: "A6",
            Family.U42: "U4(2)",
            Family.PSL28: "PSL(2,8)",
            Family.PSL33: "PSL(3,3)",
            Family.PSL217: "PSL(2,17)",
        }.get(self)

    @staticmethod
    def from_name(name: str) -> "Family":
        key = name.strip().lower()
        for fam in Family:
            if fam.cli_name == key or fam.name.lower() == key:
                return fam
        raise InvalidInput(f"unknown family {name!r}")


@dataclass(frozen=True)
class Verdict:
    family: Family
    accept: bool
    certificate: Optional[dict] = None
    witness: Optional[dict] = None

    def to_json_dict(self) -> dict:
        def enc(obj):
            if obj is None:
                return None
            out = {}
            for k, v in obj.items():
                if isinstance(v, dict):
                    out[k] = {str(a): b for a, b in v.items()}
                elif isinstance(v, (list, tuple)):
                    out[k] = [str(x) if not isinstance(x, (int, bool)) else x for x in v]
                else:
                    out[k] = v
            return out

        return {
            "family": self.family.cli_name,
            "decision": "accept" if self.accept else "reject",
            "certificate": enc(self.certificate),
            "witness": enc(self.witness),
        }


def _reject(family: Family, kind: str, **details) -> Verdict:
    return Verdict(family, False, witness={"kind": kind, **details})


def _accept(family: Family, **cert) -> Verdict:
    return Verdict(family, True, certificate=cert)


def _triangle_identification(family: Family, tri: tuple, hub: Optional[Vertex]) -> Optional[dict]:
    """Map the triangle vertices onto the family's distinguished primes.

    Prime-labeled vertices must land on themselves; abstract tokens are
    free. For hub families the hub vertex must map to the hub prime and the
    remaining two to the sink/source primes (sink first in the returned
    order). Returns the mapping or None if no identification exists.
    """
    triple = family.triple
    assert triple is not None
    if family.condition is Condition.HUB_TRIANGLE:
        hub_prime = family.hub_prime
        # the paper's digraph convention: for PSL(2,7) the sink is 2 and the
        # source is 3; for PSL(2,17) they switch.
        sink, source = (2, 3) if hub_prime == 7 else (3, 2)
        if isinstance(hub, int) and hub != hub_prime:
            return None
        others = [v for v in tri if v != hub]
        for a, b in ((others[0], others[1]), (others[1], others[0])):
            mapping = {a: sink, b: source, hub: hub_prime}
            if all(not isinstance(v, int) or v == mapping[v] for v in tri):
                return mapping
        return None
    remaining = [p for p in triple]
    mapping = {}
    for v in tri:
        if isinstance(v, int):
            if v not in remaining:
                return None
            mapping[v] = v
            remaining.remove(v)
    for v in tri:
        if v not in mapping:
            mapping[v] = remaining.pop(0)
    return mapping


def classify(gamma: Graph, family: Family) -> Verdict:
    """Decide whether gamma can be the prime graph of a group in the family.

    The input is the prime graph; all conditions are evaluated on its
    complement. Total: every graph yields accept or reject.
    """
    gbar = complement(gamma)
    tris = triangles(gbar)

    if family.condition is Condition.TRIANGLE_FREE or not tris:
        if tris:
            return _reject(
                family, "triangle", triangle=list(tris[0].vertices),
                extra=f"{len(tris)} triangle(s) in the complement",
            )
        coloring = k_color(gbar, 3)
        if coloring is None:
            return _reject(
                family, "chromatic_obstruction",
                detail="complement admits no proper 3-coloring",
                vertices=list(gbar.vertices),
            )
        return _accept(family, kind="triangle_free", coloring=coloring.to_json_dict())

    if len(tris) > 1:
        return _reject(
            family, "extra_triangle",
            triangles=[list(t.vertices) for t in tris[:2]],
            extra=f"{len(tris)} triangles in the complement",
        )

    tri = tris[0].vertices
    outside = {v: [w for w in gbar.neighbors(v) if w not in tri] for v in tri}
    connected = [v for v in tri if outside[v]]

    if family.condition is Condition.ISOLATED_TRIANGLE:
        if connected:
            v = connected[0]
            return _reject(
                family, "triangle_not_isolated", vertex=str(v),
                edge=[v, outside[v][0]],
            )
        mapping = _triangle_identification(family, tri, None)
        if mapping is None:
            return _reject(
                family, "wrong_triangle_primes", triangle=list(tri),
                required=list(family.triple),
            )
        coloring = k_color(gbar, 3)
        if coloring is None:
            return _reject(
                family, "chromatic_obstruction",
                detail="complement admits no proper 3-coloring",
                vertices=list(gbar.vertices),
            )
        return _accept(
            family, kind="isolated_triangle",
            triangle_map={v: mapping[v] for v in tri},
            coloring=coloring.to_json_dict(),
        )

    # hub families: at most one triangle vertex may reach the rest
    if len(connected) >= 2:
        return _reject(
            family, "two_connected_triangle_vertices",
            vertices=[str(v) for v in connected[:2]],
        )
    if connected:
        hub = connected[0]
    else:
        hub = max(tri, key=label_key)
    a_b = tuple(v for v in tri if v != hub)

    mapping = _triangle_identification(family, tri, hub)
    if mapping is None:
        return _reject(
            family, "hub_mismatch", triangle=list(tri), hub=str(hub),
            required_hub=family.hub_prime, required=list(family.triple),
        )
    coloring = constrained_3color(gbar, hub, a_b)
    if coloring is None:
        return _reject(
            family, "no_constrained_coloring", hub=str(hub),
            detail="no 3-coloring makes all hub neighbors outside the triangle monochromatic",
        )
    return _accept(
        family, kind="hub_triangle",
        triangle_map={v: mapping[v] for v in tri},
        hub=str(hub), isolated_pair=[str(v) for v in a_b],
        coloring=coloring.to_json_dict(),
    )


def classify_all(gamma: Graph) -> dict:
    return {fam: classify(gamma, fam) for fam in Family}


def verify_verdict(gamma: Graph, verdict: Verdict) -> bool:
    """Re-check a verdict against the graph it was issued for."""
    gbar = complement(gamma)
    fam = verdict.family
    if verdict.accept:
        cert = verdict.certificate or {}
        col = cert.get("coloring")
        if col is None:
            return False
        assignment = {_vertex_back(gbar, k): v for k, v in col["assignment"].items()}
        from .graphs import Coloring

        if not Coloring(assignment, col["k"]).is_proper(gbar):
            return False
        if cert["kind"] == "triangle_free":
            return not triangles(gbar)
        tris = triangles(gbar)
        if len(tris) != 1:
            return False
        tri = tris[0].vertices
        if set(map(str, cert["triangle_map"])) != set(map(str, tri)):
            return False
        if cert["kind"] == "isolated_triangle":
            return all(set(gbar.neighbors(v)) <= set(tri) for v in tri)
        hub = _vertex_back(gbar, cert["hub"])
        pair = [_vertex_back(gbar, v) for v in cert["isolated_pair"]]
        if any(set(gbar.neighbors(v)) - set(tri) for v in pair):
            return False
        mono = {assignment[w] for w in gbar.neighbors(hub) if w not in pair}
        return len(mono) <= 1
    w = verdict.witness or {}
    kind = w.get("kind")
    if kind in ("triangle", "extra_triangle"):
        return len(triangles(gbar)) >= (2 if kind == "extra_triangle" else 1)
    if kind == "chromatic_obstruction":
        return k_color(gbar, 3) is None
    if kind == "triangle_not_isolated":
        u, v = w["edge"]
        return gbar.has_edge(_vertex_back(gbar, u), _vertex_back(gbar, v))
    if kind in ("wrong_triangle_primes", "hub_mismatch"):
        tris = triangles(gbar)
        return len(tris) == 1 and _triangle_identification(
            fam, tris[0].vertices, _vertex_back(gbar, w["hub"]) if "hub" in w else None
        ) is None
    if kind == "two_connected_triangle_vertices":
        tris = triangles(gbar)
        if len(tris) != 1:
            return False
        tri = tris[0].vertices
        named = [_vertex_back(gbar, v) for v in w["vertices"]]
        return all(set(gbar.neighbors(v)) - set(tri) for v in named)
    if kind == "no_constrained_coloring":
        tris = triangles(gbar)
        if len(tris) != 1:
            return False
        tri = tris[0].vertices
        hub = _vertex_back(gbar, w["hub"])
        pair = tuple(v for v in tri if v != hub)
        return constrained_3color(gbar, hub, pair) is None
    return False


def _vertex_back(g: Graph, label) -> Vertex:
    """Map a serialized vertex label back onto the graph's vertex set."""
    if isinstance(label, int) or (isinstance(label, str) and label.isdigit()):
        v = int(label)
        return v if g.has_vertex(v) else label
    return label


def necessary_edge_removal_check(gamma: Graph, family: Family) -> Verdict:
    """Necessary condition independent of the full classification: the
    complement minus the family's designated edge must be 3-colorable and
    triangle-free. Prime-labeled graphs only."""
    if family.removal_edge is None:
        raise NotApplicable(f"family {family.cli_name} has no designated removal edge")
    if not all(isinstance(v, int) for v in gamma.vertices):
        raise InvalidInput("edge-removal check needs a prime-labeled graph")
    gbar = complement(gamma)
    u, v = family.removal_edge
    reduced = gbar.minus_edge(u, v) if gbar.has_vertex(u) and gbar.has_vertex(v) else gbar
    tris = triangles(reduced)
    if tris:
        return _reject(
            family, "triangle_after_removal",
            triangle=list(tris[0].vertices), removed_edge=[u, v],
        )
    coloring = k_color(reduced, 3)
    if coloring is None:
        return _reject(
            family, "chromatic_obstruction_after_removal", removed_edge=[u, v],
            vertices=list(reduced.vertices),
        )
    return _accept(
        family, kind="edge_removal", removed_edge=[u, v],
        coloring=coloring.to_json_dict(),
    )


def strict_psl33_obstruction(gamma: Graph) -> Optional[dict]:
    """Witness that gamma is not the prime graph of any group having the
    rank-3 linear group over F_3 as a composition factor: in the complement
    the vertex 3 can have degree at most 2, with neighbors only 2 and 13.

    Absence of a witness is NOT acceptance; the strict classification is
    open. Prime-labeled graphs containing the vertex 3 only.
    """
    if not all(isinstance(v, int) for v in gamma.vertices):
        raise InvalidInput("strict obstruction check needs a prime-labeled graph")
    if not gamma.has_vertex(3):
        raise InvalidInput("graph does not contain the vertex 3")
    gbar = complement(gamma)
    nbrs = gbar.neighbors(3)
    if len(nbrs) > 2:
        return {
            "kind": "degree",
            "vertex": 3,
            "degree": len(nbrs),
            "neighbors": list(nbrs),
            "detail": "vertex 3 has complement degree > 2",
        }
    for p in nbrs:
        if p not in (2, 13):
            return {
                "kind": "forbidden_edge",
                "edge": [3, p],
                "detail": "vertex 3 may only neighbor 2 and 13 in the complement",
            }
    return None


# ---------------------------------------------------------------------------
# fixture graphs (all are complements, exactly as the source pictures)


def whisker_graph(n: int) -> Graph:
    """Cycle of length n with a pendant whisker at each cycle vertex and two
    apex vertices joined to every whisker. 3-colorable, triangle-free, and
    of minimum degree 3 for every n >= 4."""
    if n < 4:
        raise InvalidInput("whisker graphs need a cycle of length at least 4")
    cyc = [f"c{i + 1}" for i in range(n)]
    whisk = [f"w{i + 1}" for i in range(n)]
    apex = ["k1", "k2"]
    edges = [(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
    edges += [(cyc[i], whisk[i]) for i in range(n)]
    edges += [(w, k) for w in whisk for k in apex]
    return Graph(cyc + whisk + apex, edges)


def groetzsch_graph() -> Graph:
    """The smallest triangle-free graph of chromatic number 4, built as the
    Mycielskian of a 5-cycle: 11 vertices, 20 edges."""
    outer = [f"c{i}" for i in range(5)]
    inner = [f"m{i}" for i in range(5)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], outer[(i - 1) % 5]) for i in range(5)]
    edges += [("z", m) for m in inner]
    return Graph(outer + inner + ["z"], edges)


def counterexample_graph() -> Graph:
    """13-vertex complement: a triangle a-b-c where c reaches five vertices
    r1..r5, each attached to one vertex of a pentagon p1..p5. 3-colorable
    with exactly one triangle and a, b isolated from the rest, yet no
    3-coloring makes r1..r5 monochromatic.
    """
    rs = [f"r{i + 1}" for i in range(5)]
    ps = [f"p{i + 1}" for i in range(5)]
    edges = [("a", "b"), ("a", "c"), ("b", "c")]
    edges += [("c", r) for r in rs]
    edges += [(ps[i], rs[i]) for i in range(5)]
    edges += [(ps[i], ps[(i + 1) % 5]) for i in range(5)]
    return Graph(["a", "b", "c"] + rs + ps, edges)


def fixture(name: str) -> Graph:
    """Named complement-graph fixtures; whisker takes a size as 'whisker:n'."""
    key = name.strip().lower()
    if key.startswith("whisker"):
        sep = key[len("whisker") :]
        if sep.startswith(":") or sep.startswith("("):
            digits = "".join(ch for ch in sep if ch.isdigit())
            if digits:
                return whisker_graph(int(digits))
        raise InvalidInput("whisker fixture needs a size, e.g. whisker:4")
    if key == "figure2":
        return counterexample_graph()
    if key == "figure4":
        return Graph([2, 3, 7], [(3, 7)])
    if key == "figure5":
        return Graph([2, 3, 5, 7], [(2, 3), (2, 7), (3, 7)])
    if key == "groetzsch":
        return groetzsch_graph()
    raise InvalidInput(f"unknown fixture {name!r}")
