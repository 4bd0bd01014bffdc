"""Isomorphism classes of small graphs and the two-clique eligibility filter.

``enumerate_all`` sweeps every labelled graph on ``n`` vertices in increasing
encoding order.  The first unvisited encoding is the least member of its
orbit, i.e. a canonical representative; all of its images under the
symmetric group are then marked visited in one vectorized step.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from pathlib import Path

import numpy as np

from .canonical import CanonicalForm, canonical_form, graph_from_encoding
from .graph import Graph, is_connected, num_pairs, pair_index, two_clique_cover
from .graph6 import from_graph6

MAX_ENUM_ORDER = 7
APPENDIX_SIZES = {"A": 6, "B": 26, "C": 53}


class EnumerationError(ValueError):
    pass


class AppendixClass(str, Enum):
    A = "A"  # cliques of 6 and 1 (K7 included)
    B = "B"  # 5 and 2
    C = "C"  # 4 and 3


@dataclass(frozen=True)
class GraphCatalog:
    order: int
    graphs: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _image_weights(n: int) -> np.ndarray:
    """``W[p, k]``: encoding weight of pair ``k`` after applying permutation ``p``."""
    m = num_pairs(n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    w = np.empty((len(perms), m), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        a, b = perms[:, i], perms[:, j]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        w[:, k] = 1 << (m - 1 - (hi * (hi - 1) // 2 + lo))
    return w


@lru_cache(maxsize=None)
def _orbit_representatives(n: int) -> tuple[int, ...]:
    m = num_pairs(n)
    if m == 0:
        return (0,)
    weights = _image_weights(n)
    total = 1 << m
    visited = np.zeros(total, dtype=bool)
    reps = []
    chunk = 4096
    for start in range(0, total, chunk):
        while True:
            window = visited[start : start + chunk]
            if window.all():
                break
            code = start + int(window.argmin())
            reps.append(code)
            cols = [k for k in range(m) if code >> (m - 1 - k) & 1]
            images = weights[:, cols].sum(axis=1) if cols else np.zeros(1, dtype=np.int64)
            visited[images] = True
    return tuple(reps)


def _sort_key(g: Graph) -> tuple[int, CanonicalForm]:
    return g.edge_count, canonical_form(g)


def enumerate_all(n: int) -> GraphCatalog:
    """One canonical graph per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise EnumerationError(f"order must be in 1..{MAX_ENUM_ORDER}, got {n}")
    graphs = [graph_from_encoding(n, c) for c in _orbit_representatives(n)]
    return GraphCatalog(n, tuple(sorted(graphs, key=_sort_key)))


def enumerate_connected(n: int) -> GraphCatalog:
    cat = enumerate_all(n)
    return GraphCatalog(n, tuple(g for g in cat if is_connected(g)))


def eligible_seven(g: Graph) -> bool:
    if g.order != 7:
        raise EnumerationError(f"expected a 7-vertex graph, got order {g.order}")
    return two_clique_cover(g) is not None


def eligible_catalog() -> GraphCatalog:
    return GraphCatalog(7, tuple(g for g in enumerate_connected(7) if eligible_seven(g)))


def appendix_class(g: Graph) -> AppendixClass:
    cover = two_clique_cover(g) if g.order == 7 else None
    if cover is None or not is_connected(g):
        raise EnumerationError("appendix class is only defined for eligible connected 7-vertex graphs")
    large = cover[0]
    if large >= 6:
        return AppendixClass.A
    return AppendixClass.B if large == 5 else AppendixClass.C


# -- appendix data ------------------------------------------------------------


def read_labelled_g6(path: Path) -> list[tuple[str, Graph]]:
    """Parse ``<label> <graph6>`` lines; ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EnumerationError(f"{path}:{lineno}: expected '<label> <graph6>'")
        out.append((parts[0], from_graph6(parts[1])))
    return out


def load_appendix(data_dir: Path) -> dict[str, Graph]:
    graphs: dict[str, Graph] = {}
    for cls in AppendixClass:
        for label, g in read_labelled_g6(Path(data_dir) / f"appendix_{cls.value.lower()}.g6"):
            if label in graphs:
                raise EnumerationError(f"label {label} appears twice")
            graphs[label] = g
    return graphs


def match_appendix_data(
    catalog: GraphCatalog, appendix: dict[str, Graph]
) -> dict[str, CanonicalForm]:
    """Check that labelled appendix graphs biject with the eligible catalog.

    ``catalog`` should be the eligible 7-vertex graphs.  Every problem found is
    collected and reported in a single error.
    """
    problems = []
    expected = {f"{c}{i}" for c, k in APPENDIX_SIZES.items() for i in range(1, k + 1)}
    missing = sorted(expected - appendix.keys(), key=_label_key)
    extra = sorted(appendix.keys() - expected, key=_label_key)
    if missing:
        problems.append(f"missing labels: {', '.join(missing)}")
    if extra:
        problems.append(f"unexpected labels: {', '.join(extra)}")

    eligible = {canonical_form(g) for g in catalog}
    by_form: dict[CanonicalForm, list[str]] = {}
    mapping = {}
    for label in sorted(appendix, key=_label_key):
        g = appendix[label]
        form = canonical_form(g)
        by_form.setdefault(form, []).append(label)
        mapping[label] = form
        if form not in eligible:
            problems.append(f"{label} is not an eligible connected 7-vertex graph")
            continue
        cls = appendix_class(g).value
        if cls != label[0]:
            problems.append(f"{label} belongs in appendix {cls}")
    for labels in by_form.values():
        if len(labels) > 1:
            problems.append(f"duplicate graph under labels {' and '.join(labels)}")
    unmatched = eligible - set(by_form)
    if unmatched:
        problems.append(f"{len(unmatched)} eligible graph(s) have no label")
    if problems:
        raise EnumerationError("; ".join(problems))
    return mapping


def class_counts(graphs) -> Counter:
    return Counter(appendix_class(g).value for g in graphs)


def _label_key(label: str) -> tuple[str, int]:
    return label[0], int(label[1:]) if label[1:].isdigit() else -1
