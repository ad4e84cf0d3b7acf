import random
from math import gcd

import pytest

from primegraph.errors import DataIntegrityError, InvalidInput, SizeLimitExceeded
from primegraph.graphs import Graph, complement
from primegraph.groups import (
    BUILTIN_NAMES,
    PermGroup,
    Permutation,
    builtin,
    cyclic,
    direct_product,
    enumerate_elements,
    frobenius_cyclic,
    group_from_json_dict,
    normalize_group_name,
    order_spectrum,
    prime_graph,
)

TABLE_ORDERS = {
    "A5": 60,
    "PSL(2,7)": 168,
    "A6": 360,
    "PSL(2,8)": 504,
    "PSL(2,17)": 2448,
    "PSL(3,3)": 5616,
    "U3(3)": 6048,
    "U4(2)": 25920,
    "SL(2,7)": 336,
    "SL(2,17)": 4896,
}


class TestPermutation:
    def test_bijection_required(self):
        with pytest.raises(InvalidInput):
            Permutation((0, 0))

    def test_compose_and_inverse(self):
        a = Permutation.from_cycles(4, [(0, 1, 2)])
        b = Permutation.from_cycles(4, [(2, 3)])
        assert (a * b).images == tuple(a.images[b.images[x]] for x in range(4))
        assert (a * a.inverse()) == Permutation.identity(4)

    def test_order(self):
        assert Permutation.from_cycles(6, [(0, 1), (2, 3, 4)]).order() == 6
        assert Permutation.identity(3).order() == 1


class TestEnumeration:
    def test_trivial_group(self):
        g = PermGroup(1, [Permutation((0,))])
        assert len(enumerate_elements(g)) == 1

    def test_cyclic_spectrum(self):
        assert order_spectrum(cyclic(6)) == frozenset({1, 2, 3, 6})

    def test_cap(self):
        g = cyclic(100)
        with pytest.raises(SizeLimitExceeded):
            g._element_rows(cap=10)

    def test_spectrum_closed_under_divisors(self):
        for g in (cyclic(12), frobenius_cyclic(11, 5), builtin("A5"), builtin("SL(2,7)")):
            spec = order_spectrum(g)
            for n in spec:
                for d in range(1, n + 1):
                    if n % d == 0:
                        assert d in spec


class TestBuiltins:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_orders_match_catalog(self, name):
        assert builtin(name).order() == TABLE_ORDERS[name]

    def test_name_normalization(self):
        assert builtin("psl27") is builtin("PSL(2,7)")
        assert normalize_group_name("U4(2)") == normalize_group_name("u42")
        with pytest.raises(InvalidInput):
            normalize_group_name("M11")

    def test_psl27_spectrum(self):
        assert order_spectrum(builtin("PSL(2,7)")) == frozenset({1, 2, 3, 4, 7})

    def test_sl27_spectrum_has_6_and_14_not_21(self):
        spec = order_spectrum(builtin("SL(2,7)"))
        assert 6 in spec and 14 in spec and 21 not in spec

    def test_sl217_realized_on_288_points(self):
        g = builtin("SL(2,17)")
        assert g.degree == 288 and g.order() == 17 * (17**2 - 1)

    def test_a5_natural_action(self):
        assert builtin("A5").degree == 5

    def test_psl217_on_projective_line(self):
        assert builtin("PSL(2,17)").degree == 18


class TestPrimeGraph:
    def test_cyclic_30_complete(self):
        g = prime_graph(cyclic(30))
        assert g == Graph([2, 3, 5], [(2, 3), (2, 5), (3, 5)])

    def test_psl27_edgeless(self):
        assert prime_graph(builtin("PSL(2,7)")) == Graph([2, 3, 7])

    def test_psl27_times_c5(self):
        g = prime_graph(direct_product(builtin("PSL(2,7)"), cyclic(5)))
        assert g == Graph([2, 3, 5, 7], [(2, 5), (3, 5), (5, 7)])
        assert complement(g) == Graph([2, 3, 5, 7], [(2, 3), (2, 7), (3, 7)])

    def test_psl28_times_c5_isolated_triangle(self):
        g = prime_graph(direct_product(builtin("PSL(2,8)"), cyclic(5)))
        gbar = complement(g)
        assert gbar == Graph([2, 3, 5, 7], [(2, 3), (2, 7), (3, 7)])


class TestDirectProduct:
    def test_trivial_factor(self):
        g = direct_product(PermGroup(1, [Permutation((0,))]), cyclic(4))
        assert g.order() == 4

    def test_order_multiplies(self):
        g = direct_product(builtin("A5"), cyclic(7))
        assert g.order() == 420

    def test_join_rule_random_pairs(self):
        rng = random.Random(99)
        pool = [
            cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), cyclic(7),
            cyclic(9), cyclic(10), cyclic(15), frobenius_cyclic(7, 3),
            frobenius_cyclic(11, 5), frobenius_cyclic(13, 3), builtin("A5"),
            builtin("SL(2,7)"),
        ]
        for _ in range(50):
            a, b = rng.choice(pool), rng.choice(pool)
            got = prime_graph(direct_product(a, b))
            ga, gb = prime_graph(a), prime_graph(b)
            vertices = set(ga.vertices) | set(gb.vertices)
            edges = set(ga.edges) | set(gb.edges)
            edges |= {
                (p, q) if (isinstance(p, int) and p < q) else (q, p)
                for p in ga.vertices
                for q in gb.vertices
                if p != q
            }
            assert got == Graph(vertices, edges)


class TestFrobeniusCyclic:
    def test_order_55(self):
        g = frobenius_cyclic(11, 5)
        assert g.order() == 55
        assert order_spectrum(g) == frozenset({1, 5, 11})

    def test_f21(self):
        g = frobenius_cyclic(7, 3)
        assert g.order() == 21
        assert order_spectrum(g) == frozenset({1, 3, 7})

    def test_divisibility_required(self):
        with pytest.raises(InvalidInput):
            frobenius_cyclic(5, 3)

    def test_no_element_of_order_pr(self):
        for r, p in ((11, 5), (7, 3), (13, 3), (31, 5)):
            assert r * p not in order_spectrum(frobenius_cyclic(r, p))


class TestGroupData:
    def test_user_group_json(self):
        data = {"name": "V4", "degree": 4, "order": 4,
                "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]}
        g = group_from_json_dict(data)
        assert g.order() == 4

    def test_declared_order_checked(self):
        data = {"name": "bad", "degree": 3, "order": 7, "generators": [[1, 2, 0]]}
        with pytest.raises(DataIntegrityError):
            group_from_json_dict(data)

    def test_declared_spectrum_checked(self):
        data = {"name": "bad", "degree": 3, "order": 3, "spectrum": [1, 2],
                "generators": [[1, 2, 0]]}
        with pytest.raises(DataIntegrityError):
            group_from_json_dict(data)
