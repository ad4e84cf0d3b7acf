"""Exact character-table arithmetic over cyclotomic integers.

Character values are integer combinations of roots of unity, stored as
sparse exponent -> coefficient maps over a per-table conductor. All
arithmetic is exact; rationality and equality go through canonical
reduction modulo the cyclotomic polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional

import numpy as np
from sympy import factorint
from sympy.polys.specialpolys import cyclotomic_poly

from .errors import DataIntegrityError, InvalidInput

EMBEDDED_TABLES = ("PSL(2,7)", "A6", "PSL(2,17)", "SL(2,17)")

# Canonical fixed-point-free module rows cited by group constructions.
FPF_ROWS = {"PSL(2,7)": ("3a", 7), "PSL(2,17)": ("16a", 17)}


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial, ascending."""
    poly = cyclotomic_poly(n)
    if n == 1:
        return (-1, 1)
    coeffs = [int(c) for c in reversed(poly.as_poly().all_coeffs())]
    return tuple(coeffs)


def _reduce_mod_phi(n: int, dense: List[int]) -> tuple:
    """Canonical residue of sum c_k x^k modulo the n-th cyclotomic polynomial."""
    phi = _phi_coeffs(n)
    d = len(phi) - 1
    r = np.zeros(max(len(dense), d), dtype=np.int64)
    r[: len(dense)] = dense
    start_max = int(np.max(np.abs(r))) if len(r) else 0
    budget = start_max
    phi_head = np.array(phi[:-1], dtype=np.int64)
    for k in range(len(r) - 1, d - 1, -1):
        c = int(r[k])
        if c == 0:
            continue
        budget += abs(c)
        if budget >= 2**60:
            return _reduce_mod_phi_exact(phi, dense)
        r[k] = 0
        r[k - d : k] -= c * phi_head
    return tuple(int(x) for x in r[:d])


def _reduce_mod_phi_exact(phi: tuple, dense: List[int]) -> tuple:
    d = len(phi) - 1
    r = list(dense) + [0] * max(0, d - len(dense))
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c == 0:
            continue
        r[k] = 0
        for i in range(d):
            r[k - d + i] -= c * phi[i]
    return tuple(r[:d])


class Cyclotomic:
    """An element of Z[zeta_N], stored as a sparse exponent -> coeff map."""

    __slots__ = ("conductor", "terms", "_reduced")

    def __init__(self, conductor: int, terms: Mapping[int, int]):
        if conductor < 1:
            raise InvalidInput("conductor must be positive")
        self.conductor = conductor
        self.terms = {e % conductor: int(c) for e, c in terms.items() if c}
        self._reduced: Optional[tuple] = None

    @staticmethod
    def integer(conductor: int, value: int) -> "Cyclotomic":
        return Cyclotomic(conductor, {0: value})

    @staticmethod
    def root(conductor: int, exponent: int, coeff: int = 1) -> "Cyclotomic":
        return Cyclotomic(conductor, {exponent: coeff})

    def _check(self, other: "Cyclotomic"):
        if self.conductor != other.conductor:
            raise InvalidInput("conductor mismatch")

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Cyclotomic(self.conductor, out)

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return Cyclotomic(self.conductor, out)

    def __mul__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check(other)
        n = self.conductor
        out: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1 + e2) % n
                out[e] = out.get(e, 0) + c1 * c2
        return Cyclotomic(n, out)

    def scale(self, k: int) -> "Cyclotomic":
        return Cyclotomic(self.conductor, {e: k * c for e, c in self.terms.items()})

    def galois(self, j: int) -> "Cyclotomic":
        """Substitution zeta -> zeta^j; requires gcd(j, N) = 1."""
        if gcd(j, self.conductor) != 1:
            raise InvalidInput(f"{j} is not coprime to the conductor {self.conductor}")
        return Cyclotomic(self.conductor, {(e * j) % self.conductor: c for e, c in self.terms.items()})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def reduced(self) -> tuple:
        """Unique coefficient vector on the power basis 1, z, ..., z^(phi(N)-1)."""
        if self._reduced is None:
            dense = [0] * self.conductor
            for e, c in self.terms.items():
                dense[e] = c
            self._reduced = _reduce_mod_phi(self.conductor, dense)
        return self._reduced

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced())

    def is_rational(self) -> bool:
        """True iff the value is a rational integer (Galois-invariant)."""
        return all(c == 0 for c in self.reduced()[1:])

    def rational_value(self) -> int:
        red = self.reduced()
        if any(c != 0 for c in red[1:]):
            raise DataIntegrityError("cyclotomic value is not rational")
        return red[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyclotomic) or other.conductor != self.conductor:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.conductor, self.reduced()))

    def __repr__(self) -> str:
        if not self.terms:
            return "Cyc(0)"
        body = " + ".join(f"{c}*z^{e}" for e, c in sorted(self.terms.items()))
        return f"Cyc[{self.conductor}]({body})"


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    order: int  # element order
    size: int


class CharacterTable:
    """Exact character table with explicit power maps."""

    def __init__(
        self,
        group: str,
        order: int,
        conductor: int,
        classes: List[ConjugacyClass],
        power_maps: Dict[int, List[int]],
        characters: List[dict],
    ):
        self.group = group
        self.order = order
        self.conductor = conductor
        self.classes = classes
        self.power_maps = power_maps
        self.characters = characters  # each: {"name": str, "values": [Cyclotomic ...]}

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def class_index(self, name: str) -> int:
        for i, c in enumerate(self.classes):
            if c.name == name:
                return i
        raise InvalidInput(f"no class named {name!r} in the {self.group} table")

    def character_index(self, name: str) -> int:
        for i, row in enumerate(self.characters):
            if row["name"] == name:
                return i
        raise InvalidInput(f"no character named {name!r} in the {self.group} table")

    def degree(self, row: int) -> int:
        return self.characters[row]["values"][self._identity_index()].rational_value()

    def _identity_index(self) -> int:
        for i, c in enumerate(self.classes):
            if c.order == 1:
                return i
        raise DataIntegrityError(f"{self.group} table has no identity class")

    def power_class(self, cls: int, exponent: int) -> int:
        """Index of the class of t^exponent for t in the given class."""
        if exponent == 0:
            return self._identity_index()
        current = cls
        for p, mult in ((int(q), m) for q, m in factorint(exponent).items()):
            if p not in self.power_maps:
                raise DataIntegrityError(
                    f"{self.group} table lacks the power map for prime {p}"
                )
            for _ in range(mult):
                current = self.power_maps[p][current]
        return current

    def inner_product(self, row_a: int, row_b: int) -> Cyclotomic:
        """|G| times <chi_a, chi_b>, as an exact cyclotomic value."""
        total = Cyclotomic.integer(self.conductor, 0)
        va = self.characters[row_a]["values"]
        vb = self.characters[row_b]["values"]
        for i, cls in enumerate(self.classes):
            total = total + (va[i] * vb[i].conjugate()).scale(cls.size)
        return total


def fixed_space_dim(table: CharacterTable, row: int, cls: int) -> int:
    """Dimension of the fixed space of a class representative in the row's
    representation: the multiplicity of the trivial character in the
    restriction to the cyclic group it generates.

    Averages chi over the powers of the element, walking the power maps.
    A non-integral or negative result means corrupted table data.
    """
    k = table.classes[cls].order
    values = table.characters[row]["values"]
    total = Cyclotomic.integer(table.conductor, 0)
    for j in range(k):
        total = total + values[table.power_class(cls, j)]
    s = total.rational_value()
    if s < 0 or s % k != 0:
        raise DataIntegrityError(
            f"{table.group}: non-integral fixed-space dimension {s}/{k} "
            f"for row {table.characters[row]['name']} on class {table.classes[cls].name}"
        )
    return s // k


@dataclass
class Report:
    """Outcome of a verification run: one line per check."""

    subject: str
    checks: List[tuple]  # (label, passed: bool, detail: str)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> List[tuple]:
        return [c for c in self.checks if not c[1]]

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"label": label, "passed": passed, "detail": detail}
                for label, passed, detail in self.checks
            ],
        }


def validate_table(table: CharacterTable) -> Report:
    """Check every CharacterTable invariant exactly."""
    checks = []

    def check(label, passed, detail=""):
        checks.append((label, bool(passed), detail))

    ident_classes = [c for c in table.classes if c.order == 1]
    check(
        "identity class",
        len(ident_classes) == 1 and ident_classes[0].size == 1,
        f"{len(ident_classes)} classes of order 1",
    )
    size_sum = sum(c.size for c in table.classes)
    check("class sizes sum to group order", size_sum == table.order, f"sum {size_sum}")
    check(
        "square count",
        len(table.characters) == len(table.classes),
        f"{len(table.characters)} rows, {len(table.classes)} classes",
    )

    try:
        degrees = [table.degree(i) for i in range(len(table.characters))]
        deg_sum = sum(d * d for d in degrees)
        check(
            "degrees are positive integers",
            all(d > 0 for d in degrees),
            f"degrees {degrees}",
        )
        check(
            "sum of squared degrees equals group order",
            deg_sum == table.order,
            f"sum {deg_sum} vs order {table.order}",
        )
    except DataIntegrityError as exc:
        check("degrees are positive integers", False, str(exc))

    ortho_ok, ortho_detail = True, ""
    for i in range(len(table.characters)):
        for j in range(i, len(table.characters)):
            expected = table.order if i == j else 0
            got = table.inner_product(i, j)
            if not (got - Cyclotomic.integer(table.conductor, expected)).is_zero():
                ortho_ok = False
                ortho_detail = (
                    f"<{table.characters[i]['name']}, {table.characters[j]['name']}> "
                    "is off"
                )
                break
        if not ortho_ok:
            break
    check("row orthogonality", ortho_ok, ortho_detail)

    needed_primes = set()
    for c in table.classes:
        needed_primes.update(int(p) for p in factorint(c.order))
    pm_ok, pm_detail = True, ""
    for p in sorted(needed_primes):
        if p not in table.power_maps:
            pm_ok, pm_detail = False, f"missing power map for {p}"
            break
        pmap = table.power_maps[p]
        if sorted(set(range(table.n_classes)) & set(pmap)) != sorted(set(pmap)) or len(
            pmap
        ) != table.n_classes:
            pm_ok, pm_detail = False, f"power map for {p} is not a class map"
            break
        for i, c in enumerate(table.classes):
            want = c.order // gcd(c.order, p)
            got = table.classes[pmap[i]].order
            if got != want:
                pm_ok, pm_detail = (
                    False,
                    f"{c.name}^{p} should have order {want}, map gives {got}",
                )
                break
        if not pm_ok:
            break
    check("power maps respect element orders", pm_ok, pm_detail)

    return Report(subject=f"{table.group} character table", checks=checks)


def _dims_positive(table: CharacterTable, orders: Iterable[int]) -> tuple:
    """All (row, class) fixed-space dims for classes of the given orders; the
    first failing pair, or None."""
    for row in range(len(table.characters)):
        for cls, c in enumerate(table.classes):
            if c.order in orders:
                if fixed_space_dim(table, row, cls) <= 0:
                    return (table.characters[row]["name"], c.name)
    return None


def _fpf_rows_of_degree(table: CharacterTable, deg: int, fpf_order: int) -> List[str]:
    """Rows of the given degree whose fixed space vanishes exactly on classes
    of element order fpf_order."""
    out = []
    for row in range(len(table.characters)):
        if table.degree(row) != deg:
            continue
        good = True
        for cls, c in enumerate(table.classes):
            if c.order == 1:
                continue
            dim = fixed_space_dim(table, row, cls)
            if c.order == fpf_order and dim != 0:
                good = False
                break
            if c.order != fpf_order and dim <= 0:
                good = False
                break
        if good:
            out.append(table.characters[row]["name"])
    return out


def verify_fixed_point_claims() -> Report:
    """Confirm the fixed-point facts the classification relies on."""
    checks = []

    def check(label, passed, detail=""):
        checks.append((label, bool(passed), detail))

    a6 = load_table("A6")
    bad = _dims_positive(a6, {2, 3, 5})
    check(
        "(a) A6: orders 2, 3, 5 fix a vector in every irreducible",
        bad is None,
        "" if bad is None else f"fails at row {bad[0]}, class {bad[1]}",
    )

    psl217 = load_table("PSL(2,17)")
    bad = _dims_positive(psl217, {2, 3})
    check(
        "(b) PSL(2,17): orders 2, 3 fix a vector in every irreducible",
        bad is None,
        "" if bad is None else f"fails at row {bad[0]}, class {bad[1]}",
    )

    sl217 = load_table("SL(2,17)")
    bad = _dims_positive(sl217, {3})
    check(
        "(c) SL(2,17): order 3 fixes a vector in every irreducible",
        bad is None,
        "" if bad is None else f"fails at row {bad[0]}, class {bad[1]}",
    )

    psl27 = load_table("PSL(2,7)")
    rows = _fpf_rows_of_degree(psl27, 3, 7)
    check(
        "(d) PSL(2,7): a degree-3 row is fixed-point-free exactly on order 7",
        FPF_ROWS["PSL(2,7)"][0] in rows,
        f"qualifying rows: {rows}",
    )

    rows = _fpf_rows_of_degree(psl217, 16, 17)
    check(
        "(e) PSL(2,17): a degree-16 row is fixed-point-free exactly on order 17",
        FPF_ROWS["PSL(2,17)"][0] in rows,
        f"qualifying rows: {rows}",
    )

    return Report(subject="fixed-point claims", checks=checks)


def table_from_json_dict(data: dict) -> CharacterTable:
    try:
        conductor = int(data["conductor"])
        classes = [
            ConjugacyClass(name=c["name"], order=int(c["order"]), size=int(c["size"]))
            for c in data["classes"]
        ]
        power_maps = {int(p): [int(i) for i in m] for p, m in data["power_maps"].items()}
        characters = [
            {
                "name": row["name"],
                "values": [
                    Cyclotomic(conductor, {int(e): int(c) for c, e in value})
                    for value in row["values"]
                ],
            }
            for row in data["characters"]
        ]
        table = CharacterTable(
            group=data["group"],
            order=int(data["order"]),
            conductor=conductor,
            classes=classes,
            power_maps=power_maps,
            characters=characters,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed character table JSON: {exc}") from exc
    return table


@lru_cache(maxsize=None)
def load_table(group: str) -> CharacterTable:
    from .groups import normalize_group_name

    canonical = normalize_group_name(group)
    if canonical not in EMBEDDED_TABLES:
        raise InvalidInput(f"no embedded character table for {canonical}")
    fname = "".join(ch for ch in canonical.lower() if ch.isalnum()) + ".json"
    path = resources.files("primegraph.data.tables") / fname
    return table_from_json_dict(json.loads(path.read_text()))


def validate_all_tables() -> List[Report]:
    return [validate_table(load_table(name)) for name in EMBEDDED_TABLES]
