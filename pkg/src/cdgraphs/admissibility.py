"""Admissible vertices and exhaustive subgraph scans.

A vertex ``v`` of ``g`` is *admissible* when deleting it, or deleting any
nonempty set of edges at it, always leaves a non-occurring graph.  It is
*strongly admissible* when in addition ``g - v`` with any nonempty set of
edges among the neighbours of ``v`` removed is non-occurring.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .graph import (
    Graph,
    Pair,
    bipartition,
    bits,
    complement,
    components,
    delete_edges,
    delete_vertex,
    edge_subset_subgraphs,
    edges_within,
    incident_edges,
    induced,
    palfy_triple_check,
)
from .occurrence import Status, Verdict

StatusFn = Callable[[Graph], Status]


@dataclass(frozen=True)
class TraceEntry:
    step: str
    graph: Graph
    status: Status

    @property
    def nonoccurring(self) -> bool:
        return self.status.verdict is Verdict.NONOCCURRING

    def __str__(self) -> str:
        return f"{self.step}: {self.status}"


@dataclass
class Admissibility:
    vertex: int
    strong: bool
    trace: list[TraceEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.nonoccurring for e in self.trace)

    def failures(self) -> list[TraceEntry]:
        return [e for e in self.trace if not e.nonoccurring]

    def __bool__(self) -> bool:
        return self.ok


def _name(names: Sequence[str] | None, v: int) -> str:
    return names[v] if names else str(v)


def _edges_str(edges, names) -> str:
    return ", ".join(f"{_name(names, a)}{_name(names, b)}" for a, b in edges)


def _check_vertex(
    g: Graph, v: int, oracle: StatusFn, strong: bool, names: Sequence[str] | None
) -> Admissibility:
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range for order {g.order}")
    res = Admissibility(v, strong)
    pv = _name(names, v)
    h = delete_vertex(g, v)
    res.trace.append(TraceEntry(f"delete {pv}", h, oracle(h)))
    inc = incident_edges(g, v)
    for sub, removed in edge_subset_subgraphs(g, inc):
        res.trace.append(TraceEntry(f"delete edges {_edges_str(removed, names)}", sub, oracle(sub)))
    if strong:
        rest = [u for u in range(g.order) if u != v]
        rest_names = [_name(names, u) for u in rest]
        nbr = g.adj[v]
        # neighbour set re-indexed inside g - v
        nbr_h = sum(1 << i for i, u in enumerate(rest) if nbr >> u & 1)
        for sub, removed in edge_subset_subgraphs(h, edges_within(h, nbr_h)):
            step = f"delete {pv} and edges {_edges_str(removed, rest_names)}"
            res.trace.append(TraceEntry(step, sub, oracle(sub)))
    return res


def is_admissible(
    g: Graph, v: int, oracle: StatusFn, names: Sequence[str] | None = None
) -> Admissibility:
    return _check_vertex(g, v, oracle, strong=False, names=names)


def is_strongly_admissible(
    g: Graph, v: int, oracle: StatusFn, names: Sequence[str] | None = None
) -> Admissibility:
    return _check_vertex(g, v, oracle, strong=True, names=names)


# -- proper spanning subgraphs -----------------------------------------------------


def monotone_obstruction(g: Graph) -> str | None:
    """An obstruction that survives deleting further edges, if ``g`` has one."""
    if palfy_triple_check(g) is not None:
        return "palfy"
    if bipartition(complement(g)) is None:
        return "odd-cycle"
    return None


@dataclass
class SubgraphScan:
    removable: list[Pair]
    pinned: dict[Pair, str | None]
    entries: list[TraceEntry]

    @property
    def unproven_pins(self) -> list[Pair]:
        return [e for e, why in self.pinned.items() if why is None]

    @property
    def all_nonoccurring(self) -> bool:
        return not self.unproven_pins and all(e.nonoccurring for e in self.entries)


def proper_subgraph_scan(
    g: Graph,
    oracle: StatusFn,
    removable: Sequence[Pair] | None = None,
    names: Sequence[str] | None = None,
) -> SubgraphScan:
    """Check every spanning subgraph with at least one edge removed.

    Edges outside ``removable`` are *pinned*: deleting one alone must already
    produce a Palfy triple or an odd complement cycle.  Both obstructions
    persist under further deletions, so every subgraph missing a pinned edge
    is covered and only subsets of ``removable`` need explicit checks.
    """
    edges = g.edge_list()
    removable = sorted(edges if removable is None else removable)
    if not set(removable) <= set(edges):
        raise ValueError("removable edges must be edges of the graph")
    pinned = {e: monotone_obstruction(delete_edges(g, [e])) for e in edges if e not in removable}
    entries = [
        TraceEntry(f"delete edges {_edges_str(removed, names)}", sub, oracle(sub))
        for sub, removed in edge_subset_subgraphs(g, removable)
    ]
    return SubgraphScan(removable, pinned, entries)


# -- vertex subsets ---------------------------------------------------------------


@dataclass(frozen=True)
class Survivor:
    graph: Graph
    status: Status
    parts: tuple[tuple[int, ...], ...]  # components, as vertices of the parent graph

    @property
    def connected(self) -> bool:
        return len(self.parts) == 1


@dataclass
class VertexSubsetScan:
    vertices: tuple[int, ...]
    candidates: int
    survivors: list[Survivor]

    @property
    def connected_survivors(self) -> list[Survivor]:
        return [s for s in self.survivors if s.connected]

    @property
    def disconnected_survivors(self) -> list[Survivor]:
        return [s for s in self.survivors if not s.connected]


def vertex_subset_occurrence_scan(
    g: Graph, vertices: Sequence[int], oracle: StatusFn
) -> VertexSubsetScan:
    """Spanning subgraphs of ``g[vertices]`` (itself included) that might occur."""
    vs = tuple(sorted(set(vertices)))
    mask = sum(1 << v for v in vs)
    h = induced(g, mask)
    cands = [h, *(sub for sub, _ in edge_subset_subgraphs(h, h.edge_list()))]
    survivors = []
    for sub in cands:
        st = oracle(sub)
        if st.verdict is Verdict.NONOCCURRING:
            continue
        parts = tuple(tuple(vs[i] for i in bits(c)) for c in components(sub))
        survivors.append(Survivor(sub, st, tuple(sorted(parts))))
    return VertexSubsetScan(vs, len(cands), survivors)
