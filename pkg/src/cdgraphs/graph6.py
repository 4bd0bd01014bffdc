"""graph6 encoding for graphs of order at most 10 (single size byte)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError, num_pairs


def to_graph6(g: Graph) -> str:
    m = num_pairs(g.order)
    out = [chr(g.order + 63)]
    for start in range(0, m, 6):
        chunk = 0
        for k in range(start, start + 6):
            chunk = chunk << 1 | (g.edges >> k & 1 if k < m else 0)
        out.append(chr(chunk + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"graph6 order {n} unsupported")
    m = num_pairs(n)
    body = s[1:]
    if len(body) != (m + 5) // 6:
        raise GraphError(f"graph6 string {s!r} has wrong length for order {n}")
    e = 0
    k = 0
    for c in body:
        v = ord(c) - 63
        for shift in range(5, -1, -1):
            if v >> shift & 1:
                if k >= m:
                    raise GraphError(f"nonzero padding in {s!r}")
                e |= 1 << k
            k += 1
    return Graph(n, e)
