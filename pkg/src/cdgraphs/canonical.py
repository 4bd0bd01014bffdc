"""Canonical forms by lexicographic minimization over vertex orderings.

The encoding of a labelled graph is its upper-triangle bit string in graph6
order read most-significant-first.  The canonical form is the least such
string over all orderings of the vertices, prefixed by the order byte.

The search places vertices one at a time; each placement fixes one more
column of the string, so a partial ordering whose prefix is already larger
than the best prefix at that depth can be dropped.  Interchangeable vertices
(those swapped by a transposition automorphism) are only branched on once.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import MAX_ORDER, Graph, GraphError, num_pairs

CanonicalForm = bytes


def encoding(g: Graph) -> int:
    """Upper-triangle bit string of ``g`` as an integer, first pair most significant."""
    m = num_pairs(g.order)
    code = 0
    for k in range(m):
        code = code << 1 | (g.edges >> k & 1)
    return code


def graph_from_encoding(order: int, code: int) -> Graph:
    m = num_pairs(order)
    e = 0
    for k in range(m):
        if code >> (m - 1 - k) & 1:
            e |= 1 << k
    return Graph(order, e)


def _twin_classes(g: Graph) -> list[int]:
    """Representative (least member) of each vertex's transposition class."""
    rep = list(range(g.order))
    adj = g.adj
    for v in range(g.order):
        for u in range(v):
            if rep[u] == u and adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                rep[v] = u
                break
    return rep


def _search(g: Graph) -> tuple[int, tuple[int, ...]]:
    n = g.order
    adj = g.adj
    rep = _twin_classes(g)
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    code = 0
    for depth in range(n):
        best = -1
        nxt: list[tuple[tuple[int, ...], int]] = []
        for placed, pmask in states:
            tried = 0
            for v in range(n):
                if pmask >> v & 1 or tried >> rep[v] & 1:
                    continue
                tried |= 1 << rep[v]
                col = 0
                for u in placed:
                    col = col << 1 | (adj[v] >> u & 1)
                if best < 0 or col < best:
                    best = col
                    nxt = [(placed + (v,), pmask | 1 << v)]
                elif col == best:
                    nxt.append((placed + (v,), pmask | 1 << v))
        code = code << depth | best
        states = nxt
    return code, states[0][0]


@lru_cache(maxsize=1 << 16)
def canonical_code(g: Graph) -> int:
    if g.order > MAX_ORDER:
        raise GraphError(f"canonical forms are limited to order {MAX_ORDER}")
    return _search(g)[0]


def canonical_ordering(g: Graph) -> tuple[int, ...]:
    """Vertex sequence whose induced labelling attains the canonical encoding."""
    return _search(g)[1]


def form_from_code(order: int, code: int) -> CanonicalForm:
    m = num_pairs(order)
    nbytes = (m + 7) // 8
    return bytes([order]) + (code << (8 * nbytes - m)).to_bytes(nbytes, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    return form_from_code(g.order, canonical_code(g))


def canonical_graph(g: Graph) -> Graph:
    return graph_from_encoding(g.order, canonical_code(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_code(g) == canonical_code(h)
