#!/usr/bin/env python
"""Regenerate the embedded character-table data files.

PSL(2,7) and A6 are written out literally; PSL(2,17) and SL(2,17) come from
the classical parametrization of the SL(2,q) tables (split/non-split torus
classes, principal and discrete series, and the two split pairs carrying
(±1 ± sqrt(17))/2 on the unipotent classes). Every table is validated with
the package's exact arithmetic before it is written.

    python scripts/gen_table_data.py
"""

from __future__ import annotations

import json
import sys
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from primegraph.chartab import table_from_json_dict, validate_table  # noqa: E402

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "primegraph" / "data" / "tables"

QR17 = {1, 2, 4, 8, 9, 13, 15, 16}

# Power maps ship for every prime below the largest element order, not just
# the primes dividing the group order: fixed-space computations walk t^j for
# arbitrary j < |t| and factor j over these maps.
PRIMES_TO_33 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def _qr7(j):
    return j % 7 in {1, 2, 4}


def integer(v):
    return [[v, 0]] if v else []


def roots(*pairs):
    """Sparse value from (coeff, exponent) pairs, merging duplicates."""
    acc = {}
    for c, e in pairs:
        acc[e] = acc.get(e, 0) + c
    return [[c, e] for e, c in sorted(acc.items()) if c]


# ---------------------------------------------------------------------------
# PSL(2,7), conductor 7

ALPHA = roots((1, 1), (1, 2), (1, 4))  # (-1 + sqrt(-7)) / 2
ALPHA_BAR = roots((1, 3), (1, 5), (1, 6))

PSL27 = {
    "group": "PSL(2,7)",
    "order": 168,
    "conductor": 7,
    "classes": [
        {"name": "1A", "order": 1, "size": 1},
        {"name": "2A", "order": 2, "size": 21},
        {"name": "3A", "order": 3, "size": 56},
        {"name": "4A", "order": 4, "size": 42},
        {"name": "7A", "order": 7, "size": 24},
        {"name": "7B", "order": 7, "size": 24},
    ],
    "power_maps": None,  # filled by psl27_power_maps()
    "characters": [
        {"name": "1a", "values": [integer(1)] * 6},
        {
            "name": "3a",
            "values": [integer(3), integer(-1), integer(0), integer(1), ALPHA, ALPHA_BAR],
        },
        {
            "name": "3b",
            "values": [integer(3), integer(-1), integer(0), integer(1), ALPHA_BAR, ALPHA],
        },
        {
            "name": "6a",
            "values": [integer(6), integer(2), integer(0), integer(0), integer(-1), integer(-1)],
        },
        {
            "name": "7a",
            "values": [integer(7), integer(-1), integer(1), integer(-1), integer(0), integer(0)],
        },
        {
            "name": "8a",
            "values": [integer(8), integer(0), integer(-1), integer(0), integer(1), integer(1)],
        },
    ],
}

# ---------------------------------------------------------------------------
# A6, conductor 5

MU_PLUS = roots((-1, 2), (-1, 3))  # (1 + sqrt(5)) / 2
MU_MINUS = roots((-1, 1), (-1, 4))  # (1 - sqrt(5)) / 2

A6 = {
    "group": "A6",
    "order": 360,
    "conductor": 5,
    "classes": [
        {"name": "1A", "order": 1, "size": 1},
        {"name": "2A", "order": 2, "size": 45},
        {"name": "3A", "order": 3, "size": 40},
        {"name": "3B", "order": 3, "size": 40},
        {"name": "4A", "order": 4, "size": 90},
        {"name": "5A", "order": 5, "size": 72},
        {"name": "5B", "order": 5, "size": 72},
    ],
    "power_maps": None,  # filled by a6_power_maps()
    "characters": [
        {"name": "1a", "values": [integer(1)] * 7},
        {
            "name": "5a",
            "values": [integer(5), integer(1), integer(2), integer(-1), integer(-1), integer(0), integer(0)],
        },
        {
            "name": "5b",
            "values": [integer(5), integer(1), integer(-1), integer(2), integer(-1), integer(0), integer(0)],
        },
        {
            "name": "8a",
            "values": [integer(8), integer(0), integer(-1), integer(-1), integer(0), MU_PLUS, MU_MINUS],
        },
        {
            "name": "8b",
            "values": [integer(8), integer(0), integer(-1), integer(-1), integer(0), MU_MINUS, MU_PLUS],
        },
        {
            "name": "9a",
            "values": [integer(9), integer(1), integer(0), integer(0), integer(1), integer(-1), integer(-1)],
        },
        {
            "name": "10a",
            "values": [integer(10), integer(-2), integer(1), integer(1), integer(0), integer(0), integer(0)],
        },
    ],
}

def psl27_power_maps():
    """PSL(2,7) power maps from the torus/unipotent class structure:
    3A sits in the split torus (order 3), 4A/2A in the non-split torus
    (order 4), 7A/7B are the unipotent classes split by squares mod 7."""

    def fold(x, n, names):
        x %= n
        x = min(x, n - x)
        return 0 if x == 0 else names[x]

    maps = {}
    for p in PRIMES_TO_33:
        pmap = [0]
        pmap.append(fold(2 * p, 4, {1: 3, 2: 1}))  # 2A as square in the order-4 torus
        pmap.append(fold(p, 3, {1: 2}))
        pmap.append(fold(p, 4, {1: 3, 2: 1}))
        if p == 7:
            pmap += [0, 0]
        else:
            pmap += [4, 5] if _qr7(p) else [5, 4]
        maps[str(p)] = pmap
    return maps


def a6_power_maps():
    """A6 = PSL(2,9): 4A/2A in the split torus (order 4), 5A/5B in the
    non-split torus (order 5), 3A/3B unipotent. Every unit of F_3 is a
    square in F_9, so coprime powers fix the unipotent classes."""

    def fold(x, n, names):
        x %= n
        x = min(x, n - x)
        return 0 if x == 0 else names[x]

    maps = {}
    for p in PRIMES_TO_33:
        pmap = [0]
        pmap.append(fold(2 * p, 4, {1: 4, 2: 1}))
        pmap += [0, 0] if p == 3 else [2, 3]
        pmap.append(fold(p, 4, {1: 4, 2: 1}))
        pmap.append(fold(p, 5, {1: 5, 2: 6}))
        pmap.append(fold(2 * p, 5, {1: 5, 2: 6}))
        maps[str(p)] = pmap
    return maps


PSL27["power_maps"] = psl27_power_maps()
A6["power_maps"] = a6_power_maps()


# ---------------------------------------------------------------------------
# PSL(2,17) and SL(2,17) from the classical SL(2,q) parametrization, q = 17


def sqrt17_combo(conductor, zeta17_step, add_one):
    """(±1 + sqrt(17))/2 family: a_plus = (1+sqrt17)/2 etc. as root sums."""
    plus = [[1, (zeta17_step * k) % conductor] for k in sorted(QR17)]
    minus = [[1, (zeta17_step * k) % conductor] for k in sorted(set(range(1, 17)) - QR17)]
    if add_one:
        plus = roots((1, 0), *[(c, e) for c, e in plus])
        minus = roots((1, 0), *[(c, e) for c, e in minus])
    return plus, minus


def two_cos(conductor, step, n, j):
    """zeta_n^j + zeta_n^-j as a sparse value, zeta_n = zeta_conductor^step."""
    return roots((1, (step * (j % n)) % conductor), (1, (step * ((-j) % n)) % conductor))


def build_psl217():
    N = 1224  # lcm(8, 9, 17)
    z8, z9, z17 = N // 8, N // 9, N // 17

    # split torus image has order 8; a^4 is the involution
    split = [("8A", 1), ("4A", 2), ("8B", 3), ("2A", 4)]
    nonsplit = [("9A", 1), ("9B", 2), ("3A", 3), ("9C", 4)]
    classes = (
        [{"name": "1A", "order": 1, "size": 1}]
        + [
            {"name": nm, "order": 8 // gcd(l, 8), "size": 153 if l == 4 else 306}
            for nm, l in split
        ]
        + [{"name": nm, "order": 9 // gcd(m, 9), "size": 272} for nm, m in nonsplit]
        + [
            {"name": "17A", "order": 17, "size": 144},
            {"name": "17B", "order": 17, "size": 144},
        ]
    )

    def fold_split(x):
        x %= 8
        x = min(x, 8 - x)
        return 0 if x == 0 else x  # 0 means identity

    def fold_nonsplit(x):
        x %= 9
        x = min(x, 9 - x)
        return 0 if x == 0 else x

    index = {"1A": 0, "8A": 1, "4A": 2, "8B": 3, "2A": 4, "9A": 5, "9B": 6, "3A": 7, "9C": 8, "17A": 9, "17B": 10}
    split_name = {1: "8A", 2: "4A", 3: "8B", 4: "2A"}
    nonsplit_name = {1: "9A", 2: "9B", 3: "3A", 4: "9C"}

    power_maps = {}
    for p in PRIMES_TO_33:
        pmap = [0]
        for _, l in split:
            f = fold_split(p * l)
            pmap.append(index["1A"] if f == 0 else index[split_name[f]])
        for _, m in nonsplit:
            f = fold_nonsplit(p * m)
            pmap.append(index["1A"] if f == 0 else index[nonsplit_name[f]])
        for uni in ("17A", "17B"):
            if p == 17:
                pmap.append(index["1A"])
            else:
                swap = p % 17 not in QR17
                other = {"17A": "17B", "17B": "17A"}
                pmap.append(index[other[uni]] if swap else index[uni])
        power_maps[str(p)] = pmap

    rows = []
    rows.append({"name": "1a", "values": [integer(1)] * 11})
    rows.append(
        {
            "name": "17a",
            "values": [integer(17)] + [integer(1)] * 4 + [integer(-1)] * 4 + [integer(0)] * 2,
        }
    )
    # principal series chi_j, j even, as zeta_8 powers (j = 2j')
    for tag, jp in (("18a", 1), ("18b", 2), ("18c", 3)):
        values = [integer(18)]
        for _, l in split:
            values.append(two_cos(N, z8, 8, jp * l))
        values += [integer(0)] * 4 + [integer(1), integer(1)]
        rows.append({"name": tag, "values": values})
    # discrete series theta_j, j even, as zeta_9 powers
    for tag, jp in (("16a", 1), ("16b", 2), ("16c", 3), ("16d", 4)):
        values = [integer(16)] + [integer(0)] * 4
        for _, m in nonsplit:
            v = two_cos(N, z9, 9, jp * m)
            values.append([[-c, e] for c, e in v])
        values += [integer(-1), integer(-1)]
        rows.append({"name": tag, "values": values})
    q_plus, q_minus = sqrt17_combo(N, z17, add_one=True)
    for tag, first, second in (("9a", q_plus, q_minus), ("9b", q_minus, q_plus)):
        values = [integer(9)]
        for _, l in split:
            values.append(integer((-1) ** l))
        values += [integer(0)] * 4 + [first, second]
        rows.append({"name": tag, "values": values})

    return {
        "group": "PSL(2,17)",
        "order": 2448,
        "conductor": N,
        "classes": classes,
        "power_maps": power_maps,
        "characters": rows,
    }


def build_sl217():
    N = 2448  # lcm(16, 18, 17)
    z16, z18, z17 = N // 16, N // 18, N // 17

    a_orders = {l: 16 // gcd(l, 16) for l in range(1, 8)}
    b_orders = {m: 18 // gcd(m, 18) for m in range(1, 9)}
    a_names = {1: "16A", 2: "8A", 3: "16B", 4: "4A", 5: "16C", 6: "8B", 7: "16D"}
    b_names = {1: "18A", 2: "9A", 3: "6A", 4: "9B", 5: "18B", 6: "3A", 7: "18C", 8: "9C"}

    classes = [
        {"name": "1A", "order": 1, "size": 1},
        {"name": "2A", "order": 2, "size": 1},
        {"name": "17A", "order": 17, "size": 144},
        {"name": "17B", "order": 17, "size": 144},
        {"name": "34A", "order": 34, "size": 144},
        {"name": "34B", "order": 34, "size": 144},
    ]
    classes += [{"name": a_names[l], "order": a_orders[l], "size": 306} for l in range(1, 8)]
    classes += [{"name": b_names[m], "order": b_orders[m], "size": 272} for m in range(1, 9)]

    index = {c["name"]: i for i, c in enumerate(classes)}

    def fold_a(x):
        x %= 16
        x = min(x, 16 - x)
        if x == 0:
            return "1A"
        if x == 8:
            return "2A"
        return a_names[x]

    def fold_b(x):
        x %= 18
        x = min(x, 18 - x)
        if x == 0:
            return "1A"
        if x == 9:
            return "2A"
        return b_names[x]

    def power_unipotent(name, p):
        central = name.startswith("34")
        qr = name.endswith("A")
        if p == 17:
            return "2A" if central else "1A"
        central = central and p % 2 == 1
        qr = qr == (p % 17 in QR17)
        return ("34" if central else "17") + ("A" if qr else "B")

    power_maps = {}
    for p in PRIMES_TO_33:
        pmap = [index["1A"], index["1A"] if p == 2 else index["2A"]]
        for name in ("17A", "17B", "34A", "34B"):
            pmap.append(index[power_unipotent(name, p)])
        for l in range(1, 8):
            pmap.append(index[fold_a(p * l)])
        for m in range(1, 9):
            pmap.append(index[fold_b(p * m)])
        power_maps[str(p)] = pmap

    def sign(j):
        return 1 if j % 2 == 0 else -1

    rows = [{"name": "1a", "values": [integer(1)] * 21}]
    rows.append(
        {
            "name": "17a",
            "values": [integer(17), integer(17)]
            + [integer(0)] * 4
            + [integer(1)] * 7
            + [integer(-1)] * 8,
        }
    )
    for j in range(1, 8):
        values = [integer(18), integer(sign(j) * 18), integer(1), integer(1), integer(sign(j)), integer(sign(j))]
        for l in range(1, 8):
            values.append(two_cos(N, z16, 16, j * l))
        values += [integer(0)] * 8
        rows.append({"name": f"18{'abcdefg'[j - 1]}", "values": values})
    for j in range(1, 9):
        values = [
            integer(16),
            integer(sign(j) * 16),
            integer(-1),
            integer(-1),
            integer(-sign(j)),
            integer(-sign(j)),
        ]
        values += [integer(0)] * 7
        for m in range(1, 9):
            v = two_cos(N, z18, 18, j * m)
            values.append([[-c, e] for c, e in v])
        rows.append({"name": f"16{'abcdefgh'[j - 1]}", "values": values})
    q_plus, q_minus = sqrt17_combo(N, z17, add_one=True)
    for tag, first, second in (("9a", q_plus, q_minus), ("9b", q_minus, q_plus)):
        values = [integer(9), integer(9), first, second, first, second]
        values += [integer((-1) ** l) for l in range(1, 8)]
        values += [integer(0)] * 8
        rows.append({"name": tag, "values": values})
    r_plus, r_minus = sqrt17_combo(N, z17, add_one=False)

    def neg(v):
        return [[-c, e] for c, e in v]

    for tag, first, second in (("8a", r_plus, r_minus), ("8b", r_minus, r_plus)):
        values = [integer(8), integer(-8), first, second, neg(first), neg(second)]
        values += [integer(0)] * 7
        values += [integer(-((-1) ** m)) for m in range(1, 9)]
        rows.append({"name": tag, "values": values})

    return {
        "group": "SL(2,17)",
        "order": 4896,
        "conductor": N,
        "classes": classes,
        "power_maps": power_maps,
        "characters": rows,
    }


def file_name(name: str) -> str:
    return "".join(ch for ch in name.lower() if ch.isalnum()) + ".json"


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for data in (PSL27, A6, build_psl217(), build_sl217()):
        table = table_from_json_dict(data)
        report = validate_table(table)
        if not report.ok:
            for label, passed, detail in report.checks:
                print(f"  [{'ok' if passed else 'FAIL'}] {label}: {detail}")
            raise SystemExit(f"{data['group']}: table validation failed")
        path = OUT_DIR / file_name(data["group"])
        path.write_text(json.dumps(data) + "\n")
        degrees = sorted(table.degree(i) for i in range(len(table.characters)))
        print(f"{data['group']}: {len(table.classes)} classes, degrees {degrees}")


if __name__ == "__main__":
    main()
