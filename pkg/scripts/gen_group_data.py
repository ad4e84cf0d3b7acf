#!/usr/bin/env python
"""Regenerate the builtin permutation-group data files.

Each group is built from explicit matrices over a small field (or a plain
alternating-group generating pair), converted to permutations of a natural
point set, and validated by full enumeration before writing JSON. Run from
the repository root:

    python scripts/gen_group_data.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from primegraph.groups import PermGroup, Permutation  # noqa: E402

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "primegraph" / "data" / "groups"


# ---------------------------------------------------------------------------
# tiny finite fields


class PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.elements = list(range(p))
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def conj(self, a):
        return a


class GF8:
    """F_2[x] / (x^3 + x + 1), elements as bitmasks 0..7."""

    def __init__(self):
        self.elements = list(range(8))
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & 0b1000:
                a ^= 0b1011
            b >>= 1
        return r

    def inv(self, a):
        for b in range(1, 8):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def generator(self):
        return 0b010  # x


class GF9:
    """F_3[i] with i^2 = -1, element a + b*i encoded as 3*a + b."""

    def __init__(self):
        self.elements = list(range(9))
        self.zero = 0
        self.one = 3  # encodes 1 + 0*i

    def _split(self, x):
        return divmod(x, 3)

    def _join(self, a, b):
        return 3 * (a % 3) + (b % 3)

    def add(self, x, y):
        a, b = self._split(x)
        c, d = self._split(y)
        return self._join(a + c, b + d)

    def neg(self, x):
        a, b = self._split(x)
        return self._join(-a, -b)

    def mul(self, x, y):
        a, b = self._split(x)
        c, d = self._split(y)
        # (a + bi)(c + di) = ac - bd + (ad + bc) i
        return self._join(a * c - b * d, a * d + b * c)

    def inv(self, x):
        for y in range(1, 9):
            if y != 0 and self.mul(x, y) == self.one:
                return y
        raise ZeroDivisionError

    def conj(self, x):
        a, b = self._split(x)
        return self._join(a, -b)

    def generator(self):
        # 1 + i has order 8 in the unit group
        return self._join(1, 1)


# ---------------------------------------------------------------------------
# matrices over a field


def mat_mul(F, A, B):
    n = len(A)
    return tuple(
        tuple(
            _dot(F, A[i], tuple(B[k][j] for k in range(n)))
            for j in range(n)
        )
        for i in range(n)
    )


def _dot(F, row, col):
    acc = F.zero
    for a, b in zip(row, col):
        acc = F.add(acc, F.mul(a, b))
    return acc


def mat_vec(F, A, v):
    return tuple(_dot(F, row, v) for row in A)


def normalize_projective(F, v):
    for x in v:
        if x != F.zero:
            c = F.inv(x)
            return tuple(F.mul(c, y) for y in v)
    raise ValueError("zero vector")


def projective_points(F, n):
    points = set()
    for idx in range(len(F.elements) ** n):
        v = []
        t = idx
        for _ in range(n):
            v.append(F.elements[t % len(F.elements)])
            t //= len(F.elements)
        v = tuple(v)
        if any(x != F.zero for x in v):
            points.add(normalize_projective(F, v))
    return sorted(points)


def perm_from_matrix(F, A, points, normalize=True):
    index = {p: i for i, p in enumerate(points)}
    images = []
    for p in points:
        q = mat_vec(F, A, p)
        if normalize:
            q = normalize_projective(F, q)
        images.append(index[q])
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# the ten groups


def alternating(n: int, cycles):
    gens = [Permutation.from_cycles(n, [c]) for c in cycles]
    return n, gens


def psl2(q: int):
    F = GF8() if q == 8 else PrimeField(q)
    z = F.generator() if q == 8 else PrimeField(q).elements[_smallest_generator(q)]
    one, zero = F.one, F.zero
    T1 = ((one, one), (zero, one))
    Tz = ((one, z), (zero, one))
    W = ((zero, one), (F.neg(one), zero))
    points = projective_points(F, 2)
    gens = [perm_from_matrix(F, A, points) for A in (T1, Tz, W)]
    return len(points), gens


def _smallest_generator(p: int) -> int:
    from sympy import primitive_root

    return primitive_root(p)


def sl2_on_vectors(q: int):
    F = PrimeField(q)
    one, zero = F.one, F.zero
    T = ((one, one), (zero, one))
    W = ((zero, one), (F.neg(one), zero))
    points = sorted(
        (a, b) for a in F.elements for b in F.elements if (a, b) != (zero, zero)
    )
    gens = [perm_from_matrix(F, A, points, normalize=False) for A in (T, W)]
    return len(points), gens


def psl33():
    F = PrimeField(3)
    E = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    C = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    points = projective_points(F, 3)
    gens = [perm_from_matrix(F, A, points) for A in (E, C)]
    return len(points), gens


def _is_unitary(F, A, J):
    # condition A^T J conj(A) = J for the form h(x, y) = x^T J conj(y)
    n = len(A)
    At = tuple(tuple(A[j][i] for j in range(n)) for i in range(n))
    Ac = tuple(tuple(F.conj(x) for x in row) for row in A)
    return mat_mul(F, mat_mul(F, At, J), Ac) == J


def _det3(F, A):
    def m(*idx):
        r = F.one
        for i, j in idx:
            r = F.mul(r, A[i][j])
        return r

    pos = F.add(F.add(m((0, 0), (1, 1), (2, 2)), m((0, 1), (1, 2), (2, 0))), m((0, 2), (1, 0), (2, 1)))
    neg = F.add(F.add(m((0, 2), (1, 1), (2, 0)), m((0, 0), (1, 2), (2, 1))), m((0, 1), (1, 0), (2, 2)))
    return F.add(pos, F.neg(neg))


def u33():
    F = GF9()
    one, zero = F.one, F.zero
    J = ((zero, zero, one), (zero, one, zero), (one, zero, zero))
    unipotents = []
    for a in F.elements:
        for b in F.elements:
            for c in F.elements:
                A = ((one, a, b), (zero, one, c), (zero, zero, one))
                if _is_unitary(F, A, J) and _det3(F, A) == one:
                    unipotents.append(A)
    assert len(unipotents) == 27, len(unipotents)
    torus = []
    for a in F.elements:
        for b in F.elements:
            for c in F.elements:
                if zero in (a, b, c):
                    continue
                A = ((a, zero, zero), (zero, b, zero), (zero, zero, c))
                if _is_unitary(F, A, J) and _det3(F, A) == one:
                    torus.append(A)
    W = tuple(tuple(F.neg(x) for x in row) for row in J)
    assert _is_unitary(F, W, J) and _det3(F, W) == one
    points = [p for p in projective_points(F, 3) if _dot(F, mat_vec(F, J, tuple(F.conj(x) for x in p)), p) == zero]
    assert len(points) == 28, len(points)
    candidates = [u for u in unipotents if u[0][1] != zero][:2] + torus[:1] + [W]
    gens = [perm_from_matrix(F, A, points) for A in candidates]
    return len(points), gens


def u42_as_psp43():
    F = PrimeField(3)
    n = 4
    J = ((0, 0, 1, 0), (0, 0, 0, 1), (2, 0, 0, 0), (0, 2, 0, 0))

    def transvection(v):
        Jv = mat_vec(F, J, v)
        return tuple(
            tuple(F.add((1 if i == j else 0), F.mul(v[i], Jv[j])) for j in range(n))
            for i in range(n)
        )

    vs = [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 1, 0, 0),
        (1, 0, 1, 0),
        (0, 1, 0, 1),
        (1, 1, 1, 1),
    ]
    points = projective_points(F, 4)
    assert len(points) == 40
    gens = [perm_from_matrix(F, transvection(v), points) for v in vs]
    return len(points), gens


SPECS = {
    "A5": {"order": 60, "build": lambda: alternating(5, [(0, 1, 2, 3, 4), (0, 1, 2)])},
    "A6": {"order": 360, "build": lambda: alternating(6, [(0, 1, 2, 3, 4), (1, 2, 3, 4, 5)])},
    "PSL(2,7)": {"order": 168, "build": lambda: psl2(7)},
    "PSL(2,8)": {"order": 504, "build": lambda: psl2(8)},
    "PSL(2,17)": {"order": 2448, "build": lambda: psl2(17)},
    "PSL(3,3)": {"order": 5616, "build": psl33},
    "U3(3)": {"order": 6048, "build": u33},
    "U4(2)": {"order": 25920, "build": u42_as_psp43},
    "SL(2,7)": {"order": 336, "build": lambda: sl2_on_vectors(7)},
    "SL(2,17)": {"order": 4896, "build": lambda: sl2_on_vectors(17)},
}


def file_name(name: str) -> str:
    return "".join(ch for ch in name.lower() if ch.isalnum()) + ".json"


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name, spec in SPECS.items():
        degree, gens = spec["build"]()
        group = PermGroup(degree, gens, name=name)
        order = group.order()
        assert order == spec["order"], f"{name}: got order {order}, want {spec['order']}"
        spectrum = sorted(group.order_spectrum())
        data = {
            "name": name,
            "degree": degree,
            "order": order,
            "spectrum": spectrum,
            "generators": [list(g.images) for g in gens],
        }
        path = OUT_DIR / file_name(name)
        path.write_text(json.dumps(data) + "\n")
        print(f"{name}: degree {degree}, order {order}, spectrum {spectrum}")


if __name__ == "__main__":
    main()
