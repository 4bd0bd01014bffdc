from __future__ import annotations

import pytest

from cdgraphs.canonical import canonical_form, canonical_graph
from cdgraphs.enumeration import (
    AppendixClass,
    EnumerationError,
    appendix_class,
    class_counts,
    eligible_catalog,
    eligible_seven,
    enumerate_all,
    enumerate_connected,
    load_appendix,
    match_appendix_data,
)
from cdgraphs.graph import Graph, bipartition, complement
from cdgraphs.graph6 import to_graph6
from oracles import pairwise_classes

ALL = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(enumerate_all(n)) == ALL[n - 1]
    assert len(enumerate_connected(n)) == CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_pairwise_isomorphism_oracle(n):
    assert len(pairwise_classes(n)) == ALL[n - 1]
    assert len(pairwise_classes(n, connected_only=True)) == CONNECTED[n - 1]


def test_entries_are_canonical_and_distinct():
    cat = enumerate_all(7)
    assert all(canonical_graph(g) == g for g in cat)
    assert len({canonical_form(g) for g in cat}) == len(cat)


def test_sorted_by_edge_count_then_form():
    cat = enumerate_all(6)
    keys = [(g.edge_count, canonical_form(g)) for g in cat]
    assert keys == sorted(keys)


def test_deterministic():
    assert [to_graph6(g) for g in enumerate_all(6)] == [to_graph6(g) for g in enumerate_all(6)]


@pytest.mark.parametrize("n", [0, 8])
def test_order_out_of_range(n):
    with pytest.raises(EnumerationError):
        enumerate_all(n)


def test_eligible():
    cat = eligible_catalog()
    assert len(cat) == 85
    assert dict(class_counts(cat)) == {"A": 6, "B": 26, "C": 53}
    assert eligible_seven(Graph.complete(7))
    c7 = Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)])
    assert not eligible_seven(c7)


def test_eligible_iff_bipartite_complement():
    for g in enumerate_connected(7):
        assert eligible_seven(g) == (bipartition(complement(g)) is not None)


def test_eligible_wrong_order():
    with pytest.raises(EnumerationError):
        eligible_seven(Graph.complete(6))


def test_appendix_classes(appendix):
    assert appendix_class(appendix["A1"]) is AppendixClass.A
    assert appendix_class(appendix["A6"]) is AppendixClass.A
    assert appendix_class(appendix["C17"]) is AppendixClass.C


def test_appendix_a_edge_counts(appendix):
    assert [appendix[f"A{i}"].edge_count for i in range(1, 7)] == [16, 17, 18, 19, 20, 21]


def test_bijection(appendix):
    mapping = match_appendix_data(eligible_catalog(), appendix)
    assert len(mapping) == 85
    assert len(set(mapping.values())) == 85


def _copy_data(tmp_path, data_dir):
    for f in data_dir.iterdir():
        (tmp_path / f.name).write_text(f.read_text())
    return tmp_path


def test_duplicate_line_named(tmp_path, data_dir):
    d = _copy_data(tmp_path, data_dir)
    path = d / "appendix_b.g6"
    lines = path.read_text().splitlines()
    b7 = next(l for l in lines if l.startswith("B7 "))
    path.write_text("\n".join(l if not l.startswith("B8 ") else "B8 " + b7.split()[1] for l in lines))
    with pytest.raises(EnumerationError, match="B7 and B8"):
        match_appendix_data(eligible_catalog(), load_appendix(d))


def test_mutated_edge_named(tmp_path, data_dir):
    d = _copy_data(tmp_path, data_dir)
    path = d / "appendix_c.g6"
    text = path.read_text()
    app = load_appendix(data_dir)
    g = app["C30"]
    h = Graph(7, g.edges ^ 1)  # toggle the pair (0, 1)
    path.write_text(text.replace(f"C30 {to_graph6(g)}", f"C30 {to_graph6(h)}"))
    with pytest.raises(EnumerationError, match="C30"):
        match_appendix_data(eligible_catalog(), load_appendix(d))


def test_missing_label_named(tmp_path, data_dir):
    d = _copy_data(tmp_path, data_dir)
    path = d / "appendix_a.g6"
    path.write_text("\n".join(l for l in path.read_text().splitlines() if not l.startswith("A3 ")))
    with pytest.raises(EnumerationError, match="missing labels: A3"):
        match_appendix_data(eligible_catalog(), load_appendix(d))
