"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .admissibility import is_admissible, is_strongly_admissible
from .constructions import ConstructionError, load_recipes, run_recipe
from .enumeration import EnumerationError, enumerate_all, enumerate_connected, load_appendix, read_labelled_g6
from .graph import GraphError
from .graph6 import from_graph6, to_graph6
from .occurrence import KnowledgeBase, OccurrenceError, Oracle
from .report import classify_all, render_dot, verify_paper

_REPO_DATA = Path(__file__).resolve().parents[2] / "data"


class InputError(Exception):
    pass


def resolve_data_dir(arg: str | None) -> Path:
    if arg is not None:
        path = Path(arg)
        if not path.is_dir():
            raise InputError(f"data directory {path} not found")
        return path
    for path in (Path("data"), _REPO_DATA):
        if (path / "knowledge_base.facts").is_file():
            return path
    raise InputError("no data directory found; pass --data-dir")


def _kb(data_dir: Path) -> KnowledgeBase:
    return KnowledgeBase.load(data_dir / "knowledge_base.facts")


def _graph_arg(text: str, data_dir: Path):
    """A graph6 string, or a label from the appendix or disconnected data."""
    labelled = dict(load_appendix(data_dir))
    labelled.update(read_labelled_g6(data_dir / "disconnected.g6"))
    if text in labelled:
        return labelled[text]
    try:
        return from_graph6(text)
    except GraphError as exc:
        raise InputError(f"{text!r} is neither a known label nor valid graph6: {exc}") from exc


def cmd_enumerate(args) -> int:
    fn = enumerate_connected if args.connected else enumerate_all
    try:
        cat = fn(args.order)
    except EnumerationError as exc:
        raise InputError(str(exc)) from exc
    for g in cat:
        print(to_graph6(g))
    print(f"# {len(cat)} graphs", file=sys.stderr)
    return 0


def cmd_classify(args) -> int:
    rep = classify_all(args.data_dir)
    sys.stdout.write(rep.to_text() if args.text else rep.to_json())
    return 0


def cmd_status(args) -> int:
    g = _graph_arg(args.graph, args.data_dir)
    oracle = Oracle(_kb(args.data_dir), check_all=args.check_all)
    if g.order > 7:
        raise InputError("status is defined for graphs on at most 7 vertices")
    st = oracle(g)
    print(f"{to_graph6(g)}: {st}")
    if args.trace:
        for name, rst in oracle.rule_statuses(g):
            print(f"  {name}: {rst}")
        fact = oracle.kb.lookup(g)
        if fact is not None:
            print(f"  knowledge base: {fact.status}")
    return 0


def cmd_admissible(args) -> int:
    g = _graph_arg(args.graph, args.data_dir)
    if not 1 <= args.vertex <= g.order:
        raise InputError(f"vertex must be in 1..{g.order} (p_k numbering)")
    oracle = _kb(args.data_dir).without(g).oracle
    names = [f"p{k + 1}" for k in range(g.order)]
    check = is_strongly_admissible if args.strong else is_admissible
    res = check(g, args.vertex - 1, oracle, names)
    kind = "strongly admissible" if args.strong else "admissible"
    for entry in res.trace:
        print(f"  {entry}")
    print(f"p{args.vertex} {'is' if res.ok else 'is not'} {kind}")
    return 0 if res.ok else 1


def cmd_verify(args) -> int:
    checks = verify_paper(args.data_dir)
    for c in checks:
        print(c)
    return 0 if all(c.passed for c in checks) else 1


def cmd_render(args) -> int:
    labeling = None
    g = None
    if args.labels:
        for r in load_recipes(args.data_dir / "constructions.recipes"):
            if r.label == args.graph:
                built = run_recipe(r)
                g, labeling = built.graph, built.labeling
        if labeling is None:
            raise InputError(f"{args.graph} has no prime labelling (only cd-based recipes do)")
    if g is None:
        g = _graph_arg(args.graph, args.data_dir)
    sys.stdout.write(render_dot(g, labeling, name=args.graph))
    return 0


def cmd_construct(args) -> int:
    recipes = {r.label: r for r in load_recipes(args.data_dir / "constructions.recipes")}
    if args.label not in recipes:
        raise InputError(f"no recipe for {args.label}; known: {', '.join(recipes)}")
    built = run_recipe(recipes[args.label])
    print(f"{args.label}: {built.recipe}  ->  {to_graph6(built.graph)}")
    if built.degrees is not None:
        for d in sorted(built.degrees, key=lambda f: (len(f.factors), f.factors)):
            print(f"  {d}")
        print(f"  primes: {', '.join(map(str, built.labeling))}")
    target = _graph_arg(args.label, args.data_dir)
    from .canonical import is_isomorphic

    ok = is_isomorphic(built.graph, target)
    print(f"matches {args.label}: {ok}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cdgraphs", description=__doc__.splitlines()[0])
    ap.add_argument("--data-dir", default=None, help="directory holding the data files (default ./data)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="print one graph6 line per isomorphism class")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("classify", help="classify the 85 eligible graphs")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--text", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("status", help="occurrence status of one graph")
    p.add_argument("graph", help="graph6 string or appendix label")
    p.add_argument("--trace", action="store_true", help="show every rule's opinion")
    p.add_argument("--check-all", action="store_true", help="run all rules and insist they agree")
    p.set_defaults(fn=cmd_status)

    p = sub.add_parser("admissible", help="check a vertex for (strong) admissibility")
    p.add_argument("graph", help="graph6 string or label")
    p.add_argument("vertex", type=int, help="vertex k, meaning p_k (1-based)")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(fn=cmd_admissible)

    p = sub.add_parser("verify-paper", help="run the full reproducibility checklist")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="DOT output for a graph")
    p.add_argument("graph", help="graph6 string or label")
    p.add_argument("--labels", action="store_true", help="name vertices by primes (cd-based recipes)")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("construct", help="rebuild a labelled graph from its recipe")
    p.add_argument("label")
    p.set_defaults(fn=cmd_construct)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.data_dir = resolve_data_dir(args.data_dir)
        return args.fn(args)
    except (InputError, GraphError, EnumerationError, ConstructionError, OccurrenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
