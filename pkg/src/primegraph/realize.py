"""Ground-truth realization of group recipes.

A recipe is turned into an explicit group: cyclic layers become affine
permutations, small modules are folded into the permutation domain, and
modules too large to act on their own points stay symbolic as exact matrix
representations of the enumerable core. Element orders in a symbolic
extension follow the affine rule: an element of core order e extends to
orders e and e*r, the latter exactly when its action matrix fixes a
nonzero vector.

The realization never consults a recipe's action annotations for its own
spectrum: fixed points are decided by linear algebra over the module
fields, which is what makes the eval/realize cross-check meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

from sympy import factorint, primitive_root

from .construct import (
    FIXES,
    FPF,
    TRIVIAL,
    Cyclic,
    GroupRecipe,
    K3Atom,
    KleinModule,
    ModuleExt,
    Product,
    Trivial,
    k3_prime_graph,
    klein_module,
)
from .errors import (
    CapabilityError,
    ContractViolation,
    DataIntegrityError,
    InvalidInput,
    SizeLimitExceeded,
)
from .graphs import Graph
from .groups import PermGroup, Permutation, builtin

DEFAULT_MAX_ORDER = 10**7
DEFAULT_FOLD_POINTS = 4096


def _mat_mul(a, b, r, n):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % r for j in range(n))
        for i in range(n)
    )


def _mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_vec(a, v, r, n):
    return tuple(sum(a[i][k] * v[k] for k in range(n)) % r for i in range(n))


def _kron(a, b, r):
    na, nb = len(a), len(b)
    return tuple(
        tuple(
            (a[i // nb][j // nb] * b[i % nb][j % nb]) % r
            for j in range(na * nb)
        )
        for i in range(na * nb)
    )


def _det_mod(m, r):
    n = len(m)
    rows = [list(row) for row in m]
    det = 1
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if rows[i][col] % r:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        inv = pow(rows[col][col], -1, r)
        det = det * rows[col][col] % r
        for i in range(col + 1, n):
            f = rows[i][col] * inv % r
            if f:
                rows[i] = [(x - f * y) % r for x, y in zip(rows[i], rows[col])]
    return det % r


def _perm_order(images) -> int:
    seen = [False] * len(images)
    out = 1
    for s in range(len(images)):
        if seen[s]:
            continue
        n, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = images[x]
            n += 1
        out = lcm(out, n)
    return out


def _mat_order(m, r, cap=100000):
    n = len(m)
    ident = _mat_identity(n)
    acc = m
    for k in range(1, cap + 1):
        if acc == ident:
            return k
        acc = _mat_mul(acc, m, r, n)
    raise SizeLimitExceeded("matrix order exceeds the search cap")


@dataclass
class _Gen:
    perm: tuple  # images on the permutation domain
    reps: list  # matrices for internal faithful representations
    mods: list  # matrices for symbolic modules
    layer_prime: Optional[int] = None  # set for cyclic-layer generators


@dataclass
class _Builder:
    degree: int = 0
    gens: List[_Gen] = field(default_factory=list)
    rep_meta: List[tuple] = field(default_factory=list)  # (r, dim) internal reps
    mod_meta: List[tuple] = field(default_factory=list)  # (r, dim) symbolic modules
    # cyclic layers: prime -> {"gen": index, "units": {acting_prime: unit}}
    layers: Dict[int, dict] = field(default_factory=dict)
    # primes whose layer cannot support a later module action (symbolic,
    # folded rank > 1, or duplicated across product factors)
    big_layers: set = field(default_factory=set)
    atom_primes: set = field(default_factory=set)
    atoms: List[str] = field(default_factory=list)
    order: int = 1  # exact order of the full group incl. symbolic modules

    def identity(self):
        return (
            tuple(range(self.degree)),
            tuple(_mat_identity(d) for _, d in self.rep_meta),
        )

    def extend_domain(self, extra: int):
        for g in self.gens:
            g.perm = g.perm + tuple(self.degree + i for i in range(extra))
        self.degree += extra

    def merge(self, other: "_Builder"):
        shared = (set(self.layers) | self.atom_primes | self.big_layers) & (
            set(other.layers) | other.atom_primes | other.big_layers
        )
        off = self.degree
        for g in other.gens:
            g.perm = tuple(range(off)) + tuple(off + x for x in g.perm)
            g.reps = [_mat_identity(d) for _, d in self.rep_meta] + g.reps
            g.mods = [_mat_identity(d) for _, d in self.mod_meta] + g.mods
        for g in self.gens:
            g.perm = g.perm + tuple(off + i for i in range(other.degree))
            g.reps = g.reps + [_mat_identity(d) for _, d in other.rep_meta]
            g.mods = g.mods + [_mat_identity(d) for _, d in other.mod_meta]
        for p, info in other.layers.items():
            info["gen"] += len(self.gens)
            self.layers[p] = info
        self.gens.extend(other.gens)
        self.degree += other.degree
        self.rep_meta.extend(other.rep_meta)
        self.mod_meta.extend(other.mod_meta)
        self.big_layers |= other.big_layers | shared
        for p in shared:
            self.layers.pop(p, None)
        self.atom_primes |= other.atom_primes
        self.atoms.extend(other.atoms)
        self.order *= other.order


def _realize_node(node: GroupRecipe, klein_rep: Optional[KleinModule]) -> _Builder:
    if isinstance(node, Trivial):
        return _Builder()
    if isinstance(node, Cyclic):
        b = _Builder()
        p = node.prime
        b.degree = p
        b.gens = [_Gen(perm=tuple((i + 1) % p for i in range(p)), reps=[], mods=[], layer_prime=p)]
        b.layers[p] = {"gen": 0, "units": {}}
        b.order = p
        return b
    if isinstance(node, K3Atom):
        b = _Builder()
        group = builtin(node.name)
        b.atom_primes = set(k3_prime_graph(node.name).vertices)
        b.atoms = [group.name]
        b.order = group.order()
        if klein_rep is not None:
            if group.name != "PSL(2,7)":
                raise CapabilityError(
                    f"no matrix module realization for {group.name}"
                )
            b.rep_meta = [(klein_rep.characteristic, 3)]
            b.gens = [_Gen(perm=(), reps=[m], mods=[]) for m in klein_rep.generators]
        else:
            b.degree = group.degree
            b.gens = [
                _Gen(perm=tuple(g.images), reps=[], mods=[]) for g in group.generators
            ]
        return b
    if isinstance(node, Product):
        if klein_rep is not None:
            left_primes = _recipe_atom_names(node.left)
            if "PSL(2,7)" in left_primes:
                b = _realize_node(node.left, klein_rep)
                b.merge(_realize_node(node.right, None))
            else:
                b = _realize_node(node.left, None)
                b.merge(_realize_node(node.right, klein_rep))
            return b
        b = _realize_node(node.left, None)
        b.merge(_realize_node(node.right, None))
        return b
    if isinstance(node, ModuleExt):
        return _realize_module(node, klein_rep)
    raise InvalidInput(f"not a recipe: {node!r}")


def _recipe_atom_names(node: GroupRecipe) -> set:
    if isinstance(node, K3Atom):
        return {node.name}
    if isinstance(node, Product):
        return _recipe_atom_names(node.left) | _recipe_atom_names(node.right)
    if isinstance(node, ModuleExt):
        return _recipe_atom_names(node.actor)
    return set()


def _realize_module(node: ModuleExt, outer_klein: Optional[KleinModule]) -> _Builder:
    r = node.module_prime
    profile = node.profile
    rep_obligations = [o for o in node.obligations if o.kind == "REP_TABLE"]
    klein = None
    if rep_obligations:
        if len(rep_obligations) > 1:
            raise CapabilityError("at most one cited module row per extension")
        ob = rep_obligations[0]
        if ob.group != "PSL(2,7)":
            raise CapabilityError(
                f"no explicit matrix realization for the {ob.group} module; "
                "the recipe stays valid but cannot be realized here"
            )
        if outer_klein is not None:
            raise CapabilityError("nested cited modules are not realizable")
        klein = klein_module(r)
    builder = _realize_node(node.actor, klein if klein is not None else outer_klein)

    fpf_frob, fixes_tower, rep_primes = [], [], set()
    for p, action in sorted(profile.items()):
        if p in builder.atom_primes:
            if action == FPF:
                if klein is None or not any(
                    o.kind == "REP_TABLE" and o.prime == p for o in node.obligations
                ):
                    raise CapabilityError(
                        f"fixed-point-free action of atom prime {p} needs a cited module row"
                    )
                rep_primes.add(p)
            continue  # FIXES and TRIVIAL atom primes ride along with the rep
        if action == FPF:
            if p not in builder.layers:
                raise CapabilityError(
                    f"fixed-point-free action requires a cyclic layer for {p}"
                )
            if (r - 1) % p != 0:
                raise ContractViolation(f"{p} does not divide {r} - 1")
            fpf_frob.append(p)
        elif action == FIXES:
            if p not in builder.layers:
                raise CapabilityError(
                    f"coordinate-permutation action requires a cyclic layer for {p}"
                )
            fixes_tower.append(p)

    if klein is not None:
        if len(builder.atoms) != 1:
            raise CapabilityError(
                "a cited module row needs a single simple atom in the actor"
            )
        missing = {
            p
            for p in builder.atom_primes
            if profile.get(p) == FPF and p not in rep_primes
        }
        if missing:
            raise CapabilityError(f"unjustified atom FPF primes {sorted(missing)}")

    rep_dim = 3 if klein is not None else 1
    transversal = list(itertools.product(*[range(x) for x in fixes_tower]))
    dim = rep_dim * len(transversal)
    if node.module_rank != dim:
        raise InvalidInput(
            f"module rank {node.module_rank} does not match the realized "
            f"dimension {dim} (rep {rep_dim} x transversal {len(transversal)})"
        )

    omegas = {p: _unit_of_order(r, p) for p in fpf_frob}
    t_index = {t: i for i, t in enumerate(transversal)}
    n_t = len(transversal)

    def diag_for(s: int) -> tuple:
        # basis vector e_t gets the conjugate character value
        # lambda(t^-1 g_s t) = omega ^ (u^-t), matching the left-coset shift
        units = builder.layers[s]["units"]
        entries = []
        for t in transversal:
            exp = 1
            for x, a in zip(fixes_tower, t):
                exp = exp * pow(units.get(x, 1), (x - a) % x, s) % s
            entries.append(pow(omegas[s], exp, r))
        return tuple(
            tuple(entries[i] if i == j else 0 for j in range(n_t)) for i in range(n_t)
        )

    def shift_for(x: int) -> tuple:
        k = fixes_tower.index(x)
        out = [[0] * n_t for _ in range(n_t)]
        for t in transversal:
            t2 = tuple(
                (a + (1 if i == k else 0)) % fixes_tower[i]
                for i, a in enumerate(t)
            )
            out[t_index[t2]][t_index[t]] = 1
        return tuple(tuple(row) for row in out)

    ident_b = _mat_identity(n_t)
    ident_a = _mat_identity(rep_dim)
    matrices = []
    for g in builder.gens:
        a_part = ident_a
        if klein is not None and g.reps:
            a_part = g.reps[0]
        s = g.layer_prime
        if s in omegas:
            b_part = diag_for(s)
        elif s in fixes_tower:
            b_part = shift_for(s)
        else:
            b_part = ident_b
        matrices.append(_kron(a_part, b_part, r) if rep_dim > 1 or n_t > 1 else
                        ((a_part[0][0] * b_part[0][0] % r,),))

    points = r**dim
    builder.order *= points
    if points <= DEFAULT_FOLD_POINTS:
        _fold_module(builder, r, dim, matrices, omegas)
    else:
        builder.mod_meta.append((r, dim))
        for g, m in zip(builder.gens, matrices):
            g.mods.append(m)
        builder.big_layers.add(r)
    return builder


def _unit_of_order(r: int, p: int) -> int:
    return pow(int(primitive_root(r)), (r - 1) // p, r)


def _fold_module(builder: _Builder, r: int, dim: int, matrices: list, omegas: dict):
    """Materialize the module as r^dim affine points in the permutation part."""
    vectors = list(itertools.product(range(r), repeat=dim))
    v_index = {v: i for i, v in enumerate(vectors)}
    base = builder.degree
    for g, m in zip(builder.gens, matrices):
        g.perm = g.perm + tuple(
            base + v_index[_mat_vec(m, v, r, dim)] for v in vectors
        )
    translations = []
    for i in range(dim):
        images = []
        for v in vectors:
            w = tuple((x + (1 if j == i else 0)) % r for j, x in enumerate(v))
            images.append(base + v_index[w])
        translations.append(
            _Gen(
                perm=tuple(range(base)) + tuple(images),
                reps=[_mat_identity(d) for _, d in builder.rep_meta],
                mods=[_mat_identity(d) for _, d in builder.mod_meta],
                layer_prime=r if dim == 1 else None,
            )
        )
    builder.degree += len(vectors)
    gen_base = len(builder.gens)
    builder.gens.extend(translations)
    if dim == 1:
        builder.layers[r] = {"gen": gen_base, "units": dict(omegas)}
    else:
        builder.big_layers.add(r)


class Realization:
    """A realized recipe: explicit permutations plus symbolic top modules."""

    def __init__(self, builder: _Builder, max_order: int):
        self.degree = builder.degree
        self.generators = builder.gens
        self.rep_meta = builder.rep_meta
        self.mod_meta = builder.mod_meta
        self.order = builder.order
        self.symbolic_modules = list(builder.mod_meta)
        self._max_order = max_order
        self._core_count: Optional[int] = None
        self._spectrum: Optional[frozenset] = None
        self._perm_group: Optional[PermGroup] = None
        core = self.order
        for rr, dd in self.mod_meta:
            core //= rr**dd
        self.core_order_expected = core
        if core > max_order:
            raise SizeLimitExceeded(
                f"core of order {core} exceeds the realization cap {max_order}"
            )

    @property
    def is_permutation_group(self) -> bool:
        return not self.rep_meta and not self.mod_meta

    def perm_group(self, name: Optional[str] = None) -> PermGroup:
        if not self.is_permutation_group:
            raise CapabilityError(
                "realization carries matrix components; no plain permutation form"
            )
        if self._perm_group is None:
            if not self.generators:
                self._perm_group = PermGroup(1, [Permutation((0,))], name=name or "trivial")
            else:
                self._perm_group = PermGroup(
                    self.degree, [Permutation(g.perm) for g in self.generators], name=name
                )
        return self._perm_group

    def _blocks(self) -> List[dict]:
        """Partition generators into independent blocks.

        Generators with disjoint support (moved points, nontrivial matrix
        components) commute and generate a direct product, so element
        orders decompose as lcms over blocks.
        """
        supports = []
        for g in self.generators:
            s = {("p", x) for x, y in enumerate(g.perm) if x != y}
            s |= {
                ("r", i)
                for i, m in enumerate(g.reps)
                if m != _mat_identity(self.rep_meta[i][1])
            }
            s |= {
                ("m", i)
                for i, m in enumerate(g.mods)
                if m != _mat_identity(self.mod_meta[i][1])
            }
            supports.append(s)
        parent = list(range(len(self.generators)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        carrier: Dict[tuple, int] = {}
        for i, s in enumerate(supports):
            for item in s:
                if item in carrier:
                    a, b = find(i), find(carrier[item])
                    if a != b:
                        parent[a] = b
                else:
                    carrier[item] = i
        groups: Dict[int, dict] = {}
        for i, s in enumerate(supports):
            if not s:
                continue  # identity generator
            root = find(i)
            block = groups.setdefault(
                root, {"gens": [], "points": set(), "reps": set(), "mods": set()}
            )
            block["gens"].append(i)
            for kind, x in s:
                {"p": block["points"], "r": block["reps"], "m": block["mods"]}[
                    kind
                ].add(x)
        return list(groups.values())

    def _block_spectrum_perm(self, block: dict) -> tuple:
        points = sorted(block["points"])
        index = {x: i for i, x in enumerate(points)}
        gens = [
            Permutation(tuple(index[self.generators[i].perm[x]] for x in points))
            for i in block["gens"]
        ]
        group = PermGroup(len(points), gens)
        rows = group._element_rows(cap=self._max_order)
        return len(rows), group.order_spectrum()

    def _block_spectrum_mixed(self, block: dict) -> tuple:
        """Tuple BFS over a block carrying matrix components.

        Module orders follow the coprime split-extension rule: an element
        of order e extends to order e*r exactly when its module matrix
        fixes a nonzero vector, i.e. when det(M - 1) vanishes.
        """
        points = sorted(block["points"])
        reps = sorted(block["reps"])
        mods = sorted(block["mods"])
        index = {x: i for i, x in enumerate(points)}
        gens = []
        for i in block["gens"]:
            g = self.generators[i]
            gens.append(
                (
                    tuple(index[g.perm[x]] for x in points),
                    tuple(g.reps[j] for j in reps),
                    tuple(g.mods[j] for j in mods),
                )
            )
        rep_meta = [self.rep_meta[j] for j in reps]
        mod_meta = [self.mod_meta[j] for j in mods]
        ident = (
            tuple(range(len(points))),
            tuple(_mat_identity(d) for _, d in rep_meta),
            tuple(_mat_identity(d) for _, d in mod_meta),
        )
        seen = {(ident[0], ident[1]): ident[2]}
        elements = [ident]
        frontier = [ident]
        while frontier:
            new = []
            for perm, rmats, mmats in frontier:
                for gp, gr, gm in gens:
                    p2 = tuple(perm[x] for x in gp)
                    r2 = tuple(
                        _mat_mul(a, b, meta[0], meta[1])
                        for a, b, meta in zip(rmats, gr, rep_meta)
                    )
                    m2 = tuple(
                        _mat_mul(a, b, meta[0], meta[1])
                        for a, b, meta in zip(mmats, gm, mod_meta)
                    )
                    key = (p2, r2)
                    if key in seen:
                        if seen[key] != m2:
                            raise DataIntegrityError(
                                "module action is inconsistent with the tower relations"
                            )
                        continue
                    seen[key] = m2
                    if len(seen) > self._max_order:
                        raise SizeLimitExceeded(
                            f"core enumeration exceeded the cap {self._max_order}"
                        )
                    elt = (p2, r2, m2)
                    elements.append(elt)
                    new.append(elt)
            frontier = new
        spectrum = set()
        for perm, rmats, mmats in elements:
            e = _perm_order(perm) if perm else 1
            for m, (rr, _) in zip(rmats, rep_meta):
                e = lcm(e, _mat_order(m, rr))
            avail = []
            for m, (rr, dd) in zip(mmats, mod_meta):
                sub = tuple(
                    tuple((m[i][j] - (1 if i == j else 0)) % rr for j in range(dd))
                    for i in range(dd)
                )
                if _det_mod(sub, rr) == 0:
                    avail.append(rr)
            for k in range(len(avail) + 1):
                for combo in itertools.combinations(avail, k):
                    total = e
                    for rr in combo:
                        total *= rr
                    spectrum.add(total)
        return len(elements), spectrum

    def order_spectrum(self) -> frozenset:
        """Exact element orders of the full group (core and module parts).

        Enumerates each independent generator block and joins spectra by
        lcm; module layers too large for explicit points contribute through
        the fixed-vector test on their exact matrix representations.
        """
        if self._spectrum is not None:
            return self._spectrum
        core_count = 1
        covered_mods = set()
        spectrum = {1}
        for block in self._blocks():
            if block["reps"] or block["mods"]:
                count, block_spec = self._block_spectrum_mixed(block)
                covered_mods |= block["mods"]
            else:
                count, block_spec = self._block_spectrum_perm(block)
            core_count *= count
            spectrum = {lcm(a, b) for a in spectrum for b in block_spec}
        # symbolic modules acted on trivially by everything never join a
        # block; they are plain elementary abelian direct factors
        for j, (rr, _) in enumerate(self.mod_meta):
            if j not in covered_mods:
                spectrum = {lcm(a, b) for a in spectrum for b in (1, rr)}
        if core_count != self.core_order_expected:
            raise DataIntegrityError(
                f"core has {core_count} elements, expected {self.core_order_expected}"
            )
        self._spectrum = frozenset(spectrum)
        return self._spectrum

    def prime_graph(self) -> Graph:
        spectrum = self.order_spectrum()
        primes = sorted(int(p) for p in factorint(self.order))
        edges = [
            (p, q)
            for i, p in enumerate(primes)
            for q in primes[i + 1 :]
            if p * q in spectrum
        ]
        return Graph(primes, edges)


def realize(recipe: GroupRecipe, max_order: int = DEFAULT_MAX_ORDER) -> Realization:
    """Realize a recipe as an explicit group.

    Cyclic towers and small modules become permutations; modules with too
    many points stay symbolic (exact matrices over their prime field), and
    the enumerable core must stay within max_order. Raises CapabilityError
    for recipe shapes outside the realizable fragment (these recipes remain
    valid; only the explicit construction is unavailable).
    """
    builder = _realize_node(recipe, None)
    return Realization(builder, max_order)
