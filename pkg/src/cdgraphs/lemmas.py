"""Graph-side checks behind the C18 and C20 eliminations.

Each check is driven by ``data/lemma_checks.json``: which vertices must be
strongly admissible, which edges the subgraph scan may remove, and for each
vertex-set case the component splits of the graphs that survive.  Vertex
``k`` in that file is index ``k - 1`` of the drawing in ``lemma_graphs.g6``.

The oracle used here never sees the fact about the graph being checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .admissibility import (
    is_admissible,
    is_strongly_admissible,
    proper_subgraph_scan,
    vertex_subset_occurrence_scan,
)
from .canonical import canonical_graph
from .enumeration import read_labelled_g6
from .graph import Graph
from .graph6 import to_graph6
from .occurrence import KnowledgeBase, Oracle

Split = tuple[tuple[int, ...], ...]


@dataclass
class VertexCaseResult:
    case: str
    vertices: tuple[int, ...]
    expected: list[Split]
    found: list[Split]
    unresolved: list[str]  # canonical graph6 of survivors nothing settles

    @property
    def ok(self) -> bool:
        return sorted(self.expected) == sorted(self.found)


@dataclass
class LemmaReport:
    label: str
    admissible: dict[int, bool] = field(default_factory=dict)
    strongly_admissible: dict[int, bool] = field(default_factory=dict)
    expected_strong: tuple[int, ...] = ()
    blocking: dict[int, list[str]] = field(default_factory=dict)
    subgraphs_checked: int = 0
    subgraph_scan_ok: bool = False
    subgraph_failures: list[str] = field(default_factory=list)
    cases: list[VertexCaseResult] = field(default_factory=list)

    def problems(self) -> list[str]:
        out = []
        for k in self.expected_strong:
            if not self.strongly_admissible.get(k):
                out.append(f"{self.label}: p{k} not strongly admissible ({'; '.join(self.blocking.get(k, []))})")
        if not self.subgraph_scan_ok:
            out.append(f"{self.label}: subgraph scan failed ({'; '.join(self.subgraph_failures)})")
        for c in self.cases:
            if not c.ok:
                msg = f"{self.label} case {c.case}: expected splits {c.expected}, found {c.found}"
                if c.unresolved:
                    msg += f"; needs a curated fact for {', '.join(c.unresolved)}"
                out.append(msg)
        return out

    @property
    def ok(self) -> bool:
        return not self.problems()


def _p_names(n: int) -> list[str]:
    return [f"p{k + 1}" for k in range(n)]


def check_lemma_graph(label: str, g: Graph, spec: dict, kb: KnowledgeBase) -> LemmaReport:
    oracle = Oracle(kb.without(g))
    names = _p_names(g.order)
    rep = LemmaReport(label, expected_strong=tuple(spec["strongly_admissible"]))
    for v in range(g.order):
        k = v + 1
        rep.admissible[k] = is_admissible(g, v, oracle, names).ok
        strong = is_strongly_admissible(g, v, oracle, names)
        rep.strongly_admissible[k] = strong.ok
        rep.blocking[k] = [str(e) for e in strong.failures()]
    removable = [(a - 1, b - 1) for a, b in spec["removable_edges"]]
    scan = proper_subgraph_scan(g, oracle, removable, names)
    rep.subgraphs_checked = len(scan.entries)
    rep.subgraph_scan_ok = scan.all_nonoccurring
    rep.subgraph_failures = [str(e) for e in scan.entries if not e.nonoccurring] + [
        f"pinned edge {names[a]}{names[b]} has no monotone obstruction" for a, b in scan.unproven_pins
    ]
    for case in spec["vertex_cases"]:
        vs = [k - 1 for k in case["vertices"]]
        res = vertex_subset_occurrence_scan(g, vs, oracle)
        found = [tuple(tuple(v + 1 for v in part) for part in s.parts) for s in res.survivors]
        expected = [tuple(tuple(part) for part in split) for split in case["survivors"]]
        unresolved = [to_graph6(canonical_graph(s.graph)) for s in res.survivors if not s.status.decided]
        rep.cases.append(
            VertexCaseResult(case["case"], tuple(case["vertices"]), expected, found, unresolved)
        )
    return rep


def load_lemma_inputs(data_dir: Path) -> tuple[dict[str, Graph], dict]:
    graphs = dict(read_labelled_g6(Path(data_dir) / "lemma_graphs.g6"))
    spec = json.loads((Path(data_dir) / "lemma_checks.json").read_text())
    spec.pop("_comment", None)
    return graphs, spec


def run_lemma_checks(data_dir: Path, kb: KnowledgeBase) -> list[LemmaReport]:
    graphs, spec = load_lemma_inputs(data_dir)
    return [check_lemma_graph(label, graphs[label], spec[label], kb) for label in sorted(spec)]
