from __future__ import annotations

import pytest

from cdgraphs.constructions import gamma_kt_graph, parse_operand
from cdgraphs.graph import Graph, complement, delete_edges, join
from cdgraphs.graph6 import from_graph6
from cdgraphs.occurrence import (
    Fact,
    KnowledgeBase,
    OccurrenceError,
    Oracle,
    Status,
    Verdict,
    diameter_three_partitions,
    recognize_gamma_kt,
    rule_cut_vertices,
    rule_diameter3,
    rule_disconnected,
    rule_gamma_kt,
    rule_odd_cycle,
    rule_palfy,
    shortest_odd_cycle,
    status,
)
from conftest import p

NO, YES = Verdict.NONOCCURRING, Verdict.OCCURRING


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestStatus:
    def test_reason_required_iff_decided(self):
        with pytest.raises(ValueError):
            Status(YES)
        with pytest.raises(ValueError):
            Status(Verdict.UNKNOWN, "x")


class TestPalfyAndOddCycle:
    def test_palfy(self):
        assert rule_palfy(parse_operand("K3+K3+K1")).verdict is NO
        assert rule_palfy(Graph.complete(7)) is None

    def test_odd_cycle(self):
        assert rule_odd_cycle(complement(cycle(5))).detail == "complement contains a 5-cycle"
        assert rule_odd_cycle(Graph.complete(7)) is None

    def test_c18_minus_p4p5_has_five_cycle(self, lemma_graphs):
        g = delete_edges(lemma_graphs["C18"], [tuple(p(4, 5))])
        assert rule_palfy(g) is None
        assert rule_odd_cycle(g).detail == "complement contains a 5-cycle"

    def test_shortest_odd_cycle(self):
        assert shortest_odd_cycle(cycle(7)) == 7
        assert shortest_odd_cycle(Graph.complete(4)) == 3
        assert shortest_odd_cycle(cycle(6)) is None


class TestDisconnected:
    def test_k3_k4(self):
        st = rule_disconnected(parse_operand("K3+K4"))
        assert st.verdict is NO and st.reason == "disconnected-inequality"
        assert st.detail == "4 = b >= 2^a-1 = 2^3-1 = 7 fails"

    def test_field_constructions(self):
        assert rule_disconnected(parse_operand("K1+K6")).reason == "G1-field-2^81"
        assert rule_disconnected(parse_operand("K2+K5")).reason == "G2-field-2^51"

    def test_structure(self):
        assert rule_disconnected(parse_operand("K1+K1+K1")).reason == "disconnected-structure"
        assert rule_disconnected(Graph.from_edges(4, [(0, 1), (1, 2)])).reason == "disconnected-structure"

    def test_unlisted_passing_pair_is_unknown(self):
        st = rule_disconnected(parse_operand("K2+K3"))
        assert st.verdict is Verdict.UNKNOWN

    def test_connected_absent(self):
        assert rule_disconnected(Graph.complete(3)) is None


class TestDiameterThree:
    def test_partition_shape(self, appendix):
        for label in ("B3", "C4", "C30"):
            g = appendix[label]
            try:
                parts = diameter_three_partitions(g)
            except ValueError:
                continue
            for part in parts:
                sets = [part.rho1, part.rho2, part.rho3, part.rho4]
                assert all(sets) or part.rho2 == 0
                assert sum(s.bit_count() for s in sets) == 7
                assert part.rho1 | part.rho2 | part.rho3 | part.rho4 == 0b1111111

    def test_b3_pendant_basepoint(self, appendix):
        g = appendix["B3"]
        pendant = min(range(7), key=g.degree)
        parts = {x.p: x for x in diameter_three_partitions(g)}
        assert pendant in parts and parts[pendant].rho4

    def test_c4_from_triangle(self, appendix):
        g = appendix["C4"]
        for part in diameter_three_partitions(g):
            if part.p in (0, 1, 2):
                assert (part.near, part.far) == (3, 4)

    def test_wrong_diameter(self):
        with pytest.raises(ValueError):
            diameter_three_partitions(Graph.complete(4))

    def test_rule(self, appendix):
        assert rule_diameter3(appendix["B2"]).detail == "|rho3|=2<3"
        assert rule_diameter3(appendix["B3"]) is None
        assert rule_diameter3(Graph.complete(5)) is None


class TestCutAndGamma:
    def test_cut_vertices(self, appendix):
        assert rule_cut_vertices(appendix["B1"]).detail == "2 cut vertices"
        assert rule_cut_vertices(appendix["C1"]).verdict is NO
        assert rule_cut_vertices(Graph.complete(7)) is None

    @pytest.mark.parametrize("label,kt", [("A1", (6, 1)), ("B5", (5, 2)), ("C17", (4, 3))])
    def test_recognize(self, appendix, label, kt):
        assert recognize_gamma_kt(appendix[label]) == kt

    def test_rule(self):
        assert rule_gamma_kt(gamma_kt_graph(6, 1)).verdict is YES
        assert rule_gamma_kt(gamma_kt_graph(2, 2)).verdict is YES
        assert rule_gamma_kt(gamma_kt_graph(5, 2)).verdict is NO
        assert rule_gamma_kt(cycle(5)) is None

    @pytest.mark.parametrize("k,t", [(k, t) for n in range(2, 11) for t in range(1, n // 2 + 1) for k in [n - t]])
    def test_round_trip(self, k, t):
        assert recognize_gamma_kt(gamma_kt_graph(k, t)) == (k, t)


class TestOracle:
    def test_direct_product(self):
        st = status(join(Graph.complete(2), parse_operand("K1+K4")))
        assert st.verdict is YES and st.reason == "direct-product"

    def test_complete_graphs_need_the_singleton_fact(self, kb):
        assert status(Graph.complete(7)).verdict is Verdict.UNKNOWN
        assert status(Graph.complete(7), kb).verdict is YES

    def test_kb_examples(self, kb, appendix):
        st = status(appendix["C10"], kb)
        assert st.verdict is NO and st.reason.startswith("LM-Sigma^L_{2,2}")
        assert status(from_graph6("EJ]w"), kb).reason == "L2-diam3-6v"
        assert status(appendix["C30"], kb).verdict is Verdict.UNKNOWN

    def test_relabel_invariance(self, kb, appendix):
        for label in ("B2", "B13", "C10", "C4", "C30"):
            g = appendix[label]
            assert status(g.relabel([3, 6, 0, 5, 1, 2, 4]), kb) == status(g, kb)

    def test_order_limit(self):
        with pytest.raises(ValueError):
            status(Graph.complete(8))

    def test_check_all_agrees_on_eligible(self, kb, appendix):
        strict = Oracle(kb, check_all=True)
        for g in appendix.values():
            assert strict(g).verdict is kb.oracle(g).verdict


class TestKnowledgeBase:
    def test_loads(self, kb):
        assert len(kb) >= 10

    def test_duplicate_rejected(self, tmp_path):
        f = tmp_path / "kb.facts"
        f.write_text('@ OCCURRING a "x"\n@ OCCURRING b "y"\n')
        with pytest.raises(OccurrenceError, match="duplicates"):
            KnowledgeBase.load(f)

    def test_isomorphic_duplicate_rejected(self):
        g = from_graph6("EJ]w")
        facts = [Fact(g, YES, "a"), Fact(g.relabel([5, 4, 3, 2, 1, 0]), YES, "b")]
        with pytest.raises(OccurrenceError):
            KnowledgeBase.from_facts(facts)

    def test_malformed_line(self, tmp_path):
        f = tmp_path / "kb.facts"
        f.write_text("@ MAYBE a\n")
        with pytest.raises(OccurrenceError, match="malformed"):
            KnowledgeBase.load(f)

    def test_rule_conflict_named(self, tmp_path, data_dir):
        text = (data_dir / "knowledge_base.facts").read_text()
        flipped = text.replace("EJbw OCCURRING", "EJbw NONOCCURRING")
        assert flipped != text
        f = tmp_path / "kb.facts"
        f.write_text(flipped)
        with pytest.raises(OccurrenceError, match="EJbw.*direct-product"):
            KnowledgeBase.load(f)

    def test_occurring_fact_hit_by_any_rule(self):
        with pytest.raises(OccurrenceError, match="palfy"):
            KnowledgeBase.from_facts([Fact(Graph.empty(3), YES, "bogus")])

    def test_order_limit(self):
        with pytest.raises(OccurrenceError):
            KnowledgeBase.from_facts([Fact(Graph.complete(8), YES, "big")])

    def test_without(self, kb, appendix):
        assert kb.without(appendix["C18"]).lookup(appendix["C18"]) is None
        assert len(kb.without(appendix["C18"])) == len(kb) - 1
