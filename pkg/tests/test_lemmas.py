from __future__ import annotations

import json

from cdgraphs.canonical import is_isomorphic
from cdgraphs.lemmas import check_lemma_graph, load_lemma_inputs, run_lemma_checks
from cdgraphs.occurrence import KnowledgeBase


def test_drawings_match_appendix(lemma_graphs, appendix):
    for label, g in lemma_graphs.items():
        assert is_isomorphic(g, appendix[label])


def test_all_checks_pass(data_dir, kb):
    reports = run_lemma_checks(data_dir, kb)
    assert [r.label for r in reports] == ["C18", "C20"]
    for r in reports:
        assert r.problems() == []


def test_reason_tags_in_traces(data_dir, kb):
    allowed = {"palfy", "odd-cycle", "disconnected-inequality", "disconnected-structure",
               "cut-vertices", "diameter3", "gamma-kt"}
    allowed |= {f.source for f in kb.facts.values()}
    graphs, spec = load_lemma_inputs(data_dir)
    from cdgraphs.admissibility import is_strongly_admissible

    for label, g in graphs.items():
        oracle = kb.without(g).oracle
        for k in spec[label]["strongly_admissible"]:
            for e in is_strongly_admissible(g, k - 1, oracle).trace:
                assert e.status.reason in allowed


def test_missing_fact_is_flagged(data_dir, kb, lemma_graphs):
    # without the bowtie/K2+K3 style facts the b-i survivor is no longer settled
    from cdgraphs.graph6 import from_graph6

    thin = kb.without(from_graph6("DJ_"))
    _, spec = load_lemma_inputs(data_dir)
    rep = check_lemma_graph("C18", lemma_graphs["C18"], spec["C18"], thin)
    assert rep.ok  # survivors are still survivors, now with unknown status
    bi = next(c for c in rep.cases if c.case == "b-i")
    assert bi.unresolved == ["DJ_"]


def test_wrong_expectation_reported(data_dir, kb, lemma_graphs):
    _, spec = load_lemma_inputs(data_dir)
    bad = json.loads(json.dumps(spec["C18"]))
    bad["vertex_cases"][1]["survivors"] = [[[1, 2, 3], [5, 6, 7]]]
    bad["strongly_admissible"].append(2)
    rep = check_lemma_graph("C18", lemma_graphs["C18"], bad, kb)
    problems = rep.problems()
    assert any("p2 not strongly admissible" in x for x in problems)
    assert any("case b-ii" in x for x in problems)


def test_target_fact_is_withheld(tmp_path, data_dir, lemma_graphs):
    # a knowledge base claiming C18 occurs must not influence its own check
    text = (data_dir / "knowledge_base.facts").read_text()
    flipped = text.replace("FJa^W NONOCCURRING", "FJa^W OCCURRING")
    assert flipped != text
    f = tmp_path / "kb.facts"
    f.write_text(flipped)
    kb = KnowledgeBase.load(f)
    _, spec = load_lemma_inputs(data_dir)
    assert check_lemma_graph("C18", lemma_graphs["C18"], spec["C18"], kb).ok
