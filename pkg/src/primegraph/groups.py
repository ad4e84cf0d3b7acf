"""Small finite groups as permutation groups, enumerated in full.

Ground truth for everything else: element enumeration gives order spectra,
and spectra give prime graphs. Builtin generator data lives in
data/groups/*.json and is revalidated (order, and where recorded the full
order spectrum) the first time a group is enumerated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import factorint, isprime, primitive_root

from .errors import DataIntegrityError, InvalidInput, SizeLimitExceeded
from .graphs import Graph

ENUMERATION_CAP = 10**7

BUILTIN_NAMES = (
    "A5",
    "PSL(2,7)",
    "A6",
    "PSL(2,8)",
    "PSL(2,17)",
    "PSL(3,3)",
    "U3(3)",
    "U4(2)",
    "SL(2,7)",
    "SL(2,17)",
)

K3_NAMES = BUILTIN_NAMES[:8]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as the image tuple."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise InvalidInput("images do not form a bijection")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self * other)(x) = self(other(x))."""
        a, b = self.images, other.images
        return Permutation(tuple(a[b[x]] for x in range(len(a))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def order(self) -> int:
        seen = [False] * len(self.images)
        result = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            result = lcm(result, length)
        return result


def _perm_order_from_row(row) -> int:
    seen = bytearray(len(row))
    result = 1
    for start in range(len(row)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = row[x]
            length += 1
        result = lcm(result, length)
    return result


class PermGroup:
    """A group given by permutation generators on a fixed point set."""

    def __init__(self, degree: int, generators: Sequence[Permutation], name: Optional[str] = None):
        if not generators:
            raise InvalidInput("need at least one generator")
        for g in generators:
            if g.degree != degree:
                raise InvalidInput("generator degree mismatch")
        self.degree = degree
        self.generators = tuple(generators)
        self.name = name
        self._rows: Optional[np.ndarray] = None
        self._spectrum: Optional[frozenset] = None

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"PermGroup({label}, {len(self.generators)} generators)"

    def _element_rows(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        """All elements as image rows, in deterministic BFS order.

        Breadth-first closure with per-generator vectorized composition;
        rows are deduplicated exactly (full byte keys, no hashing tricks).
        """
        if self._rows is not None:
            return self._rows
        n = self.degree
        dtype = np.int16 if n < 2**15 else np.int32
        gens = [np.array(g.images, dtype=dtype) for g in self.generators]
        ident = np.arange(n, dtype=dtype)
        seen = {ident.tobytes()}
        chunks = [ident.reshape(1, n)]
        frontier = ident.reshape(1, n)
        while len(frontier):
            fresh = []
            for g in gens:
                for row in np.unique(frontier[:, g], axis=0):
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(row)
            if len(seen) > cap:
                raise SizeLimitExceeded(
                    f"group enumeration exceeded the cap of {cap} elements"
                )
            if fresh:
                frontier = np.array(fresh)
                chunks.append(frontier)
            else:
                frontier = np.empty((0, n), dtype=dtype)
        self._rows = np.concatenate(chunks)
        return self._rows

    def order(self) -> int:
        return len(self._element_rows())

    def elements(self) -> frozenset:
        return frozenset(Permutation(tuple(int(x) for x in row)) for row in self._element_rows())

    def order_spectrum(self) -> frozenset:
        if self._spectrum is None:
            rows = self._element_rows()
            self._spectrum = frozenset(_perm_order_from_row(row.tolist()) for row in rows)
        return self._spectrum


def enumerate_elements(g: PermGroup) -> frozenset:
    return g.elements()


def order_spectrum(g: PermGroup) -> frozenset:
    return g.order_spectrum()


def prime_graph(g: PermGroup) -> Graph:
    """Vertices: prime divisors of |g|; edge p-q iff pq is an element order."""
    spectrum = g.order_spectrum()
    primes = sorted(int(p) for p in factorint(g.order()))
    edges = [
        (p, q)
        for i, p in enumerate(primes)
        for q in primes[i + 1 :]
        if p * q in spectrum
    ]
    return Graph(primes, edges)


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """Product acting on the disjoint union of the two point sets."""
    n, m = a.degree, b.degree
    gens = [
        Permutation(tuple(g.images) + tuple(n + i for i in range(m))) for g in a.generators
    ] + [
        Permutation(tuple(range(n)) + tuple(n + i for i in g.images)) for g in b.generators
    ]
    name = None
    if a.name and b.name:
        name = f"{a.name} x {b.name}"
    return PermGroup(n + m, gens, name=name)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InvalidInput("cyclic group order must be positive")
    images = tuple((i + 1) % n for i in range(n))
    return PermGroup(n, [Permutation(images)], name=f"C{n}")


def frobenius_cyclic(r: int, p: int) -> PermGroup:
    """Affine maps x -> a*x + b over the field with r elements, with a in the
    order-p subgroup of the units: a Frobenius group of type (p, r)."""
    if not isprime(r) or not isprime(p):
        raise InvalidInput("frobenius_cyclic needs two primes")
    if (r - 1) % p != 0:
        raise InvalidInput(f"{p} does not divide {r} - 1")
    u = pow(int(primitive_root(r)), (r - 1) // p, r)
    translation = Permutation(tuple((x + 1) % r for x in range(r)))
    multiplication = Permutation(tuple((u * x) % r for x in range(r)))
    return PermGroup(r, [translation, multiplication], name=f"C{r}:C{p}")


def normalize_group_name(name: str) -> str:
    """Match both spellings of builtin names, e.g. 'PSL(2,7)' and 'psl27'."""
    key = "".join(ch for ch in name.lower() if ch.isalnum())
    table = {"".join(ch for ch in n.lower() if ch.isalnum()): n for n in BUILTIN_NAMES}
    if key not in table:
        raise InvalidInput(f"unknown builtin group {name!r}")
    return table[key]


def _data_file_name(name: str) -> str:
    return "".join(ch for ch in name.lower() if ch.isalnum()) + ".json"


def group_from_json_dict(data: dict) -> PermGroup:
    try:
        degree = int(data["degree"])
        gens = [Permutation(tuple(int(x) for x in images)) for images in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed group JSON: {exc}") from exc
    for g in gens:
        if g.degree != degree:
            raise InvalidInput("generator degree mismatch in group JSON")
    group = PermGroup(degree, gens, name=data.get("name"))
    declared_order = data.get("order")
    if declared_order is not None and group.order() != int(declared_order):
        raise DataIntegrityError(
            f"group {data.get('name')!r}: computed order {group.order()} "
            f"differs from declared {declared_order}"
        )
    declared_spectrum = data.get("spectrum")
    if declared_spectrum is not None:
        computed = group.order_spectrum()
        if computed != frozenset(int(x) for x in declared_spectrum):
            raise DataIntegrityError(
                f"group {data.get('name')!r}: computed order spectrum differs from declared"
            )
    return group


def builtin(name: str) -> PermGroup:
    """A builtin group from embedded generator data, validated on load."""
    return _load_builtin(normalize_group_name(name))


@lru_cache(maxsize=None)
def _load_builtin(canonical: str) -> PermGroup:
    path = resources.files("primegraph.data.groups") / _data_file_name(canonical)
    data = json.loads(path.read_text())
    if data.get("name") != canonical:
        raise DataIntegrityError(f"data file for {canonical} carries name {data.get('name')!r}")
    return group_from_json_dict(data)
