#!/usr/bin/env python3
"""Print the admissibility traces and vertex-case survivors for C18 and C20."""

from __future__ import annotations

import argparse
from pathlib import Path

from cdgraphs.admissibility import is_strongly_admissible
from cdgraphs.lemmas import load_lemma_inputs, run_lemma_checks
from cdgraphs.occurrence import KnowledgeBase

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data-dir", type=Path, default=ROOT / "data")
    ap.add_argument("--verbose", action="store_true", help="print every trace step")
    args = ap.parse_args()
    kb = KnowledgeBase.load(args.data_dir / "knowledge_base.facts")
    graphs, _ = load_lemma_inputs(args.data_dir)
    for rep in run_lemma_checks(args.data_dir, kb):
        g = graphs[rep.label]
        print(f"== {rep.label}")
        strong = [k for k, ok in rep.strongly_admissible.items() if ok]
        print(f"strongly admissible: {', '.join(f'p{k}' for k in strong)}")
        for k, blockers in rep.blocking.items():
            if blockers:
                print(f"  p{k} blocked by: {blockers[0]}" + (f" (+{len(blockers) - 1} more)" if len(blockers) > 1 else ""))
        if args.verbose:
            oracle = kb.without(g).oracle
            names = [f"p{i + 1}" for i in range(g.order)]
            for k in strong:
                print(f"  trace p{k}:")
                for entry in is_strongly_admissible(g, k - 1, oracle, names).trace:
                    print(f"    {entry}")
        print(f"subgraph scan: {rep.subgraphs_checked} subgraphs, all non-occurring={rep.subgraph_scan_ok}")
        for c in rep.cases:
            verts = ",".join(f"p{v}" for v in c.vertices)
            print(f"  case {c.case} [{verts}]: survivors {c.found} {'ok' if c.ok else 'MISMATCH'}")
        for problem in rep.problems():
            print(f"  PROBLEM: {problem}")


if __name__ == "__main__":
    main()
