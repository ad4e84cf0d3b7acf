"""Shared test helpers: deterministic graph corpora and samplers."""

from __future__ import annotations

import itertools
import random

import pytest

from primegraph.classify import Family, classify
from primegraph.graphs import Graph, complement


def all_graphs(n: int, prefix: str = "v"):
    """Every labeled graph on n token vertices (2^C(n,2) of them)."""
    names = [f"{prefix}{i + 1}" for i in range(n)]
    pairs = list(itertools.combinations(names, 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph(names, edges)


def random_graph(rng: random.Random, n: int, p: float, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i + 1}" for i in range(n)]
    edges = [
        (u, v) for u, v in itertools.combinations(names, 2) if rng.random() < p
    ]
    return Graph(names, edges)


def random_tripartite(rng: random.Random, n: int, p: float, prefix: str = "v") -> Graph:
    """Random 3-partite graph (hence 3-colorable); may contain triangles."""
    names = [f"{prefix}{i + 1}" for i in range(n)]
    part = {v: rng.randrange(3) for v in names}
    edges = [
        (u, v)
        for u, v in itertools.combinations(names, 2)
        if part[u] != part[v] and rng.random() < p
    ]
    return Graph(names, edges)


def random_accepted_complement(rng: random.Random, family: Family) -> Graph:
    """A random complement graph whose prime graph the family accepts.

    Rejection-samples; the shapes are biased toward the family's condition
    so acceptance is common.
    """
    while True:
        style = rng.random()
        if family.condition.value == "triangle_free" or style < 0.3:
            n = rng.randint(1, 8)
            gbar = random_tripartite(rng, n, rng.uniform(0.2, 0.6))
        elif family.condition.value == "isolated_triangle":
            rest = random_tripartite(rng, rng.randint(0, 5), rng.uniform(0.2, 0.6))
            names = list(rest.vertices) + ["t1", "t2", "t3"]
            edges = list(rest.edges) + [("t1", "t2"), ("t1", "t3"), ("t2", "t3")]
            gbar = Graph(names, edges)
        else:
            rest = random_tripartite(rng, rng.randint(0, 5), rng.uniform(0.2, 0.6))
            names = list(rest.vertices) + ["ta", "tb", "tc"]
            edges = list(rest.edges) + [("ta", "tb"), ("ta", "tc"), ("tb", "tc")]
            part0 = [v for v in rest.vertices if rng.random() < 0.5]
            # attach the hub to an independent set so the monochromatic
            # coloring condition stays satisfiable
            indep = []
            for v in part0:
                if all(not rest.has_edge(v, w) for w in indep):
                    indep.append(v)
            edges += [("tc", v) for v in indep]
            gbar = Graph(names, edges)
        gamma = complement(gbar)
        if classify(gamma, family).accept:
            return gamma


@pytest.fixture(scope="session")
def service_client():
    from starlette.testclient import TestClient

    from primegraph.service import create_app

    with TestClient(create_app(), raise_server_exceptions=False) as client:
        yield client
