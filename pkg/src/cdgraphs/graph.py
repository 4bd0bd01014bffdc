"""Small immutable graphs with bit-packed adjacency.

A graph on ``n`` vertices stores its edge set as one integer whose bit ``k``
is the pair ``(i, j)``, ``i < j``, at position ``k = j*(j-1)/2 + i``.  This is
the column-major upper-triangle order used by graph6, so encoding and
canonicalization share one layout.

Vertex subsets are plain ``int`` bitmasks throughout.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

MAX_ORDER = 10

VertexSet = int
Pair = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid surgery requests."""


def pair_index(i: int, j: int) -> int:
    if i == j:
        raise GraphError(f"self-loop at vertex {i}")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    order: int
    edges: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if self.edges < 0 or self.edges >> num_pairs(self.order):
            raise GraphError("edge bits outside the upper triangle")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, pairs: Iterable[Pair]) -> Graph:
        e = 0
        for i, j in pairs:
            if not (0 <= i < order and 0 <= j < order):
                raise GraphError(f"edge ({i}, {j}) out of range for order {order}")
            e |= 1 << pair_index(i, j)
        return cls(order, e)

    @classmethod
    def complete(cls, order: int) -> Graph:
        return cls(order, (1 << num_pairs(order)) - 1)

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, 0)

    # -- basic queries ----------------------------------------------------

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbour mask of every vertex."""
        nb = [0] * self.order
        for i, j in self.edge_list():
            nb[i] |= 1 << j
            nb[j] |= 1 << i
        return tuple(nb)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.order) - 1

    def edge_list(self) -> list[Pair]:
        out = []
        for j in range(1, self.order):
            base = j * (j - 1) // 2
            for i in range(j):
                if self.edges >> (base + i) & 1:
                    out.append((i, j))
        return out

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.edges >> pair_index(i, j) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((d.bit_count() for d in self.adj), reverse=True))

    def relabel(self, perm: tuple[int, ...] | list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabel needs a permutation of all vertices")
        return Graph.from_edges(self.order, ((perm[i], perm[j]) for i, j in self.edge_list()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_list()})"


# -- surgery --------------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(g.order, ((1 << num_pairs(g.order)) - 1) ^ g.edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} not in graph of order {g.order}")
    if g.order == 1:
        raise GraphError("cannot delete the only vertex")
    keep = [u for u in range(g.order) if u != v]
    return induced(g, mask_of(keep))


def delete_edges(g: Graph, pairs: Iterable[Pair]) -> Graph:
    e = g.edges
    for i, j in pairs:
        if not (0 <= i < g.order and 0 <= j < g.order) or not g.has_edge(i, j):
            raise GraphError(f"({i}, {j}) is not an edge")
        e &= ~(1 << pair_index(i, j))
    return Graph(g.order, e)


def induced(g: Graph, vs: VertexSet) -> Graph:
    """Subgraph induced on ``vs``; surviving vertices keep their relative order."""
    keep = bits(vs & g.all_vertices)
    if not keep or vs & ~g.all_vertices:
        raise GraphError("induced subgraph needs a nonempty subset of the vertices")
    where = {v: k for k, v in enumerate(keep)}
    return Graph.from_edges(
        len(keep), ((where[i], where[j]) for i, j in g.edge_list() if i in where and j in where)
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.order
    if n + h.order > MAX_ORDER:
        raise GraphError(f"combined order {n + h.order} exceeds {MAX_ORDER}")
    pairs = g.edge_list() + [(i + n, j + n) for i, j in h.edge_list()]
    return Graph.from_edges(n + h.order, pairs)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides.

    This is the graph of a direct product of groups with disjoint prime sets.
    """
    u = disjoint_union(g, h)
    n = g.order
    cross = [(i, n + j) for i in range(n) for j in range(h.order)]
    return Graph(u.order, u.edges | Graph.from_edges(u.order, cross).edges)


def edge_subset_subgraphs(
    g: Graph, removable: Iterable[Pair]
) -> Iterator[tuple[Graph, tuple[Pair, ...]]]:
    """``(subgraph, removed)`` for each nonempty subset of ``removable``.

    Subsets are visited in increasing bitmask order over the sorted edge list.
    """
    rem = sorted({(min(p), max(p)) for p in removable})
    for i, j in rem:
        if not g.has_edge(i, j):
            raise GraphError(f"({i}, {j}) is not an edge")
    for sub in range(1, 1 << len(rem)):
        removed = tuple(rem[k] for k in bits(sub))
        yield delete_edges(g, removed), removed


def incident_edges(g: Graph, v: int) -> list[Pair]:
    return [(min(v, u), max(v, u)) for u in bits(g.adj[v])]


def edges_within(g: Graph, vs: VertexSet) -> list[Pair]:
    return [(i, j) for i, j in g.edge_list() if vs >> i & 1 and vs >> j & 1]


# -- structure ------------------------------------------------------------


def _reach(g: Graph, start: int, allowed: VertexSet) -> VertexSet:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components, ordered by least vertex."""
    left = g.all_vertices if within is None else within
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def distances_from(g: Graph, v: int) -> list[float]:
    dist: list[float] = [math.inf] * g.order
    dist[v] = 0
    seen = frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return dist


def eccentricity(g: Graph, v: int) -> float:
    return max(distances_from(g, v))


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``math.inf`` when disconnected."""
    return max(eccentricity(g, v) for v in range(g.order))


def is_clique(g: Graph, vs: VertexSet) -> bool:
    return all(vs & ~(g.adj[v] | 1 << v) == 0 for v in bits(vs))


def max_clique(g: Graph) -> VertexSet:
    """Largest clique; ties go to the numerically least mask."""
    best = 0
    for m in range(1, 1 << g.order):
        if m.bit_count() > best.bit_count() and is_clique(g, m):
            best = m
    return best


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A proper 2-colouring, least vertex of each component on side A."""
    side_a = side_b = 0
    for comp in components(g):
        start = (comp & -comp).bit_length() - 1
        colour = {start: 0}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
        for v, c in colour.items():
            if c:
                side_b |= 1 << v
            else:
                side_a |= 1 << v
    return side_a, side_b


def palfy_triple_check(g: Graph) -> tuple[int, int, int] | None:
    """Least three vertices spanning no edge, if any."""
    for a, b, c in combinations(range(g.order), 3):
        if not (g.adj[a] >> b & 1 or g.adj[a] >> c & 1 or g.adj[b] >> c & 1):
            return a, b, c
    return None


def two_clique_cover_sides(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Split into two cliques maximizing the larger one.

    Ties are broken by the least mask for the larger side.  Searches all
    subsets directly rather than going through a colouring of the complement.
    """
    full = g.all_vertices
    best = None
    for a in range(1 << g.order):
        b = full & ~a
        if a.bit_count() < b.bit_count():
            continue
        if is_clique(g, a) and is_clique(g, b):
            if best is None or a.bit_count() > best[0].bit_count():
                best = (a, b)
    return best


def two_clique_cover(g: Graph) -> tuple[int, int] | None:
    sides = two_clique_cover_sides(g)
    if sides is None:
        return None
    return sides[0].bit_count(), sides[1].bit_count()


def cut_vertices(g: Graph) -> VertexSet:
    """Vertices whose removal disconnects their component."""
    base = len(components(g))
    out = 0
    for v in range(g.order):
        if g.adj[v] and len(components(g, g.all_vertices & ~(1 << v))) > base:
            out |= 1 << v
    return out
