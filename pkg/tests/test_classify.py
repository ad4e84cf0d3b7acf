import itertools
import random

import pytest

from conftest import all_graphs, random_graph, random_tripartite
from primegraph.classify import (
    Family,
    classify,
    classify_all,
    fixture,
    necessary_edge_removal_check,
    strict_psl33_obstruction,
    verify_verdict,
    whisker_graph,
)
from primegraph.errors import InvalidInput, NotApplicable
from primegraph.graphs import Graph, complement, k_color, triangles
from primegraph.groups import builtin, cyclic, direct_product, frobenius_cyclic, prime_graph

TRIANGLE_FREE_FAMILIES = (
    Family.SOLVABLE,
    Family.U33,
    Family.U42,
    Family.PSL33,
    Family.MULTI,
)


class TestFamily:
    def test_from_name(self):
        assert Family.from_name("psl27") is Family.PSL27
        assert Family.from_name("SOLVABLE") is Family.SOLVABLE
        with pytest.raises(InvalidInput):
            Family.from_name("a5")

    def test_triples(self):
        assert Family.PSL27.triple == (2, 3, 7)
        assert Family.A6.triple == (2, 3, 5)
        assert Family.PSL33.triple == (2, 3, 13)
        assert Family.PSL217.triple == (2, 3, 17)
        assert Family.SOLVABLE.triple is None


class TestSpecExamples:
    def test_complete_graph_accepts_everywhere(self):
        for names in (["a", "b", "c"], [2, 3, 5, 7]):
            g = Graph(names, itertools.combinations(names, 2))
            for fam in Family:
                v = classify(g, fam)
                assert v.accept
                assert verify_verdict(g, v)

    def test_figure2_rejections(self):
        gamma = complement(fixture("figure2"))
        v = classify(gamma, Family.PSL27)
        assert not v.accept and v.witness["kind"] == "no_constrained_coloring"
        for fam in (Family.A6, Family.PSL28):
            w = classify(gamma, fam)
            assert not w.accept and w.witness["kind"] == "triangle_not_isolated"
        for fam in TRIANGLE_FREE_FAMILIES:
            w = classify(gamma, fam)
            assert not w.accept and w.witness["kind"] == "triangle"
        for fam in Family:
            assert verify_verdict(gamma, classify(gamma, fam))

    def test_figure5_family_matrix(self):
        gamma = complement(fixture("figure5"))
        assert classify(gamma, Family.PSL27).accept
        assert not classify(gamma, Family.A6).accept  # triangle is {2,3,7}
        abstract = gamma.relabel({2: "x", 3: "y", 7: "z", 5: "w"})
        assert classify(abstract, Family.A6).accept
        assert classify(abstract, Family.PSL27).accept

    def test_groetzsch_rejects_everywhere(self):
        gamma = complement(fixture("groetzsch"))
        for fam in Family:
            v = classify(gamma, fam)
            assert not v.accept
            assert v.witness["kind"] == "chromatic_obstruction"
            assert verify_verdict(gamma, v)


class TestPrimeLabelConstraints:
    def test_triangle_237_rejected_for_a6(self):
        gbar = Graph([2, 3, 7], [(2, 3), (2, 7), (3, 7)])
        assert not classify(complement(gbar), Family.A6).accept
        assert classify(complement(gbar), Family.PSL28).accept

    def test_triangle_2_3_11_rejected_everywhere(self):
        gbar = Graph([2, 3, 11], [(2, 3), (2, 11), (3, 11)])
        gamma = complement(gbar)
        for fam in Family:
            assert not classify(gamma, fam).accept

    def test_hub_must_be_the_hub_prime(self):
        # triangle {2,3,7} but the outside-connected vertex is 2, not 7
        gbar = Graph([2, 3, 7, 11], [(2, 3), (2, 7), (3, 7), (2, 11)])
        v = classify(complement(gbar), Family.PSL27)
        assert not v.accept and v.witness["kind"] == "hub_mismatch"

    def test_mixed_labels_forced_partially(self):
        gbar = Graph([5, "x", "y"], [(5, "x"), (5, "y"), ("x", "y")])
        assert classify(complement(gbar), Family.A6).accept
        assert not classify(complement(gbar), Family.PSL28).accept


class TestHubSelection:
    def test_isolated_triangle_hub_is_largest(self):
        gbar = Graph(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])
        v = classify(complement(gbar), Family.PSL27)
        assert v.accept and v.certificate["hub"] == "c"

    def test_two_connected_vertices_reject(self):
        gbar = Graph(
            ["a", "b", "c", "x", "y"],
            [("a", "b"), ("a", "c"), ("b", "c"), ("b", "x"), ("c", "y")],
        )
        v = classify(complement(gbar), Family.PSL27)
        assert not v.accept and v.witness["kind"] == "two_connected_triangle_vertices"
        assert verify_verdict(complement(gbar), v)

    def test_extra_triangle_rejects(self):
        gbar = Graph(
            ["a", "b", "c", "d"],
            [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")],
        )
        v = classify(complement(gbar), Family.PSL27)
        assert not v.accept and v.witness["kind"] == "extra_triangle"


class TestFamilyAgreement:
    def test_triangle_free_families_agree_exhaustively(self):
        for n in range(6):
            for gbar in all_graphs(n):
                gamma = complement(gbar)
                decisions = {
                    fam: classify(gamma, fam).accept for fam in TRIANGLE_FREE_FAMILIES
                }
                assert len(set(decisions.values())) == 1

    def test_isolated_families_agree_on_abstract(self):
        rng = random.Random(17)
        for _ in range(150):
            gbar = random_graph(rng, rng.randint(1, 7), rng.random())
            gamma = complement(gbar)
            assert (
                classify(gamma, Family.A6).accept
                == classify(gamma, Family.PSL28).accept
            )

    def test_hub_families_agree_on_abstract(self):
        rng = random.Random(19)
        for _ in range(150):
            gbar = random_graph(rng, rng.randint(1, 7), rng.random())
            gamma = complement(gbar)
            assert (
                classify(gamma, Family.PSL27).accept
                == classify(gamma, Family.PSL217).accept
            )

    def test_classify_all_consistency(self):
        gamma = complement(fixture("figure5"))
        verdicts = classify_all(gamma)
        assert verdicts[Family.PSL27].accept and not verdicts[Family.SOLVABLE].accept


class TestMonotonicity:
    def test_multi_rejection_stable_under_complement_edge_addition(self):
        rng = random.Random(29)
        for _ in range(120):
            gbar = random_graph(rng, rng.randint(2, 7), rng.random())
            if classify(complement(gbar), Family.MULTI).accept:
                continue
            non_edges = [
                (u, v)
                for u, v in itertools.combinations(gbar.vertices, 2)
                if not gbar.has_edge(u, v)
            ]
            if not non_edges:
                continue
            extra = rng.choice(non_edges)
            bigger = Graph(gbar.vertices, list(gbar.edges) + [extra])
            assert not classify(complement(bigger), Family.MULTI).accept


class TestSoundnessAgainstGroups:
    SOLVABLE_FACTORS = {
        Family.PSL27: [cyclic(5), cyclic(55), frobenius_cyclic(11, 5)],
        Family.U33: [cyclic(5), cyclic(13)],
        Family.A6: [cyclic(7), frobenius_cyclic(29, 7)],
        Family.U42: [cyclic(7)],
        Family.PSL28: [cyclic(5), frobenius_cyclic(11, 5)],
        Family.PSL33: [cyclic(5), cyclic(7), cyclic(35)],
        Family.PSL217: [cyclic(5), frobenius_cyclic(11, 5)],
    }

    @pytest.mark.parametrize(
        "family", [f for f in Family if f.group_name is not None]
    )
    def test_products_with_coprime_solvable_accepted(self, family):
        t = builtin(family.group_name)
        for s in self.SOLVABLE_FACTORS[family]:
            g = direct_product(t, s)
            gamma = prime_graph(g)
            v = classify(gamma, family)
            assert v.accept, (family, s.name, v.witness)
            assert verify_verdict(gamma, v)


class TestEdgeRemovalCheck:
    def test_psl27_triangle_accepts(self):
        gbar = Graph([2, 3, 7], [(2, 3), (2, 7), (3, 7)])
        v = necessary_edge_removal_check(complement(gbar), Family.PSL27)
        assert v.accept and v.certificate["removed_edge"] == [2, 7]

    def test_a6_triangle_accepts(self):
        gbar = Graph([2, 3, 5], [(2, 3), (2, 5), (3, 5)])
        assert necessary_edge_removal_check(complement(gbar), Family.A6).accept

    def test_surviving_triangle_rejects(self):
        # second triangle shares only the 3-7 edge, so it outlives the
        # removal of 2-7
        gbar = Graph(
            [2, 3, 7, 11],
            [(2, 3), (2, 7), (3, 7), (3, 11), (7, 11)],
        )
        v = necessary_edge_removal_check(complement(gbar), Family.PSL27)
        assert not v.accept and v.witness["kind"] == "triangle_after_removal"
        assert v.witness["triangle"] == [3, 7, 11]

    def test_not_applicable_families(self):
        gamma = complement(Graph([2, 3, 7], [(2, 3)]))
        for fam in TRIANGLE_FREE_FAMILIES:
            with pytest.raises(NotApplicable):
                necessary_edge_removal_check(gamma, fam)

    def test_needs_prime_labels(self):
        with pytest.raises(InvalidInput):
            necessary_edge_removal_check(Graph(["a"]), Family.PSL27)

    def test_acceptance_implies_removal_check(self):
        # the full hub condition is strictly stronger than the removal one
        rng = random.Random(37)
        pool = [2, 3, 7, 5, 11, 13, 17, 19, 23]
        checked = 0
        for _ in range(300):
            n = rng.randint(2, 9)
            names = rng.sample(pool, n)
            edges = [
                (u, v)
                for u, v in itertools.combinations(names, 2)
                if rng.random() < 0.35
            ]
            gamma = complement(Graph(names, edges))
            if classify(gamma, Family.PSL27).accept:
                checked += 1
                assert necessary_edge_removal_check(gamma, Family.PSL27).accept
        assert checked > 20


class TestStrictObstruction:
    def test_whisker_placement_fires(self):
        gbar = whisker_graph(4)
        primes = [2, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        mapping = {v: primes[i] for i, v in enumerate(gbar.vertices)}
        target = list(gbar.vertices)[3]
        mapping[target] = 3
        relabeled = gbar.relabel(mapping)
        witness = strict_psl33_obstruction(complement(relabeled))
        assert witness is not None and witness["kind"] == "degree"

    def test_edgeless_complement_no_witness(self):
        gamma = Graph([2, 3, 13], [(2, 3), (2, 13), (3, 13)])
        assert strict_psl33_obstruction(gamma) is None

    def test_single_3_13_edge_allowed(self):
        gbar = Graph([2, 3, 13], [(3, 13)])
        assert strict_psl33_obstruction(complement(gbar)) is None

    def test_forbidden_edge_witness(self):
        gbar = Graph([2, 3, 5, 13], [(3, 5)])
        witness = strict_psl33_obstruction(complement(gbar))
        assert witness == {
            "kind": "forbidden_edge",
            "edge": [3, 5],
            "detail": "vertex 3 may only neighbor 2 and 13 in the complement",
        }

    def test_requires_vertex_3(self):
        with pytest.raises(InvalidInput):
            strict_psl33_obstruction(Graph([2, 5]))
        with pytest.raises(InvalidInput):
            strict_psl33_obstruction(Graph(["a", "b"]))


class TestFixtures:
    def test_figure4(self):
        assert fixture("figure4") == Graph([2, 3, 7], [(3, 7)])

    def test_figure5(self):
        assert fixture("figure5") == Graph([2, 3, 5, 7], [(2, 3), (2, 7), (3, 7)])

    def test_whisker_shape(self):
        g = fixture("whisker:4")
        assert len(g.vertices) == 10 and len(g.edges) == 16
        assert triangles(g) == [] and k_color(g, 3) is not None
        with pytest.raises(InvalidInput):
            fixture("whisker:3")

    def test_figure2_structure(self):
        g = fixture("figure2")
        assert len(g.vertices) == 13 and len(g.edges) == 18
        assert g.degree("a") == 2 and g.degree("b") == 2 and g.degree("c") == 7

    def test_unknown_fixture(self):
        with pytest.raises(InvalidInput):
            fixture("figure9")


class TestCertificatesReverify:
    def test_random_verdicts_reverify(self):
        rng = random.Random(41)
        for _ in range(200):
            gbar = (
                random_tripartite(rng, rng.randint(1, 7), rng.random())
                if rng.random() < 0.5
                else random_graph(rng, rng.randint(1, 7), rng.random())
            )
            gamma = complement(gbar)
            fam = rng.choice(list(Family))
            v = classify(gamma, fam)
            assert verify_verdict(gamma, v), (gamma.to_json_dict(), fam, v)
