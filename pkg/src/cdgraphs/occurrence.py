"""Rule chain and knowledge base deciding whether a graph occurs.

A graph *occurs* when it is the prime character degree graph of some finite
solvable group.  The rules below are necessary conditions (each one can only
rule a graph out) except for the component table, the gamma family and the
direct-product rule, which can also certify occurrence.  Anything the rules
cannot settle falls through to curated literature facts, then to Unknown.

Rules are evaluated on the canonical relabelling of the input, and every
reason string is label-free, so isomorphic inputs get identical statuses.
"""

from __future__ import annotations

import re
import shlex
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from pathlib import Path

from .canonical import CanonicalForm, canonical_form, canonical_graph
from .graph import (
    Graph,
    bipartition,
    bits,
    complement,
    components,
    cut_vertices,
    diameter,
    distances_from,
    induced,
    is_clique,
    palfy_triple_check,
)
from .graph6 import from_graph6, to_graph6

MAX_STATUS_ORDER = 7


class Verdict(str, Enum):
    OCCURRING = "occurring"
    NONOCCURRING = "non-occurring"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Status:
    verdict: Verdict
    reason: str | None = None
    detail: str = ""

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.UNKNOWN) != (self.reason is None):
            raise ValueError("decided statuses need a reason; unknown ones carry none")

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.UNKNOWN

    def __str__(self) -> str:
        if not self.decided:
            return self.verdict.value
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.verdict.value} [{self.reason}]{tail}"


UNKNOWN = Status(Verdict.UNKNOWN)


def _no(reason: str, detail: str) -> Status:
    return Status(Verdict.NONOCCURRING, reason, detail)


class OccurrenceError(ValueError):
    """A curated fact disagrees with a rule, or the fact file is malformed."""


# -- necessary conditions -------------------------------------------------------


def rule_palfy(g: Graph) -> Status | None:
    if palfy_triple_check(g) is None:
        return None
    return _no("palfy", "three vertices span no edge")


def shortest_odd_cycle(g: Graph) -> int | None:
    """Length of the shortest odd cycle, by BFS over (vertex, parity) states."""
    best = None
    for s in range(g.order):
        dist = {(s, 0): 0}
        frontier = [(s, 0)]
        while frontier and (s, 1) not in dist:
            nxt = []
            for v, par in frontier:
                for u in bits(g.adj[v]):
                    state = (u, 1 - par)
                    if state not in dist:
                        dist[state] = dist[(v, par)] + 1
                        nxt.append(state)
            frontier = nxt
        if (s, 1) in dist and (best is None or dist[(s, 1)] < best):
            best = dist[(s, 1)]
    return best


def rule_odd_cycle(g: Graph) -> Status | None:
    co = complement(g)
    if bipartition(co) is not None:
        return None
    return _no("odd-cycle", f"complement contains a {shortest_odd_cycle(co)}-cycle")


# (smaller, larger) component sizes of disconnected graphs known to occur.
# Other pairs that pass the inequality stay Unknown unless a fact covers them.
OCCURRING_COMPONENT_SIZES = {
    (1, 1): "H2-small-disconnected",
    (1, 2): "H2-small-disconnected",
    (1, 3): "H2-small-disconnected",
    (1, 4): "L3-disconnected",
    (1, 5): "BLL-disconnected",
    (1, 6): "G1-field-2^81",
    (2, 5): "G2-field-2^51",
}


def rule_disconnected(g: Graph) -> Status | None:
    comps = components(g)
    if len(comps) == 1:
        return None
    if len(comps) != 2:
        return _no("disconnected-structure", f"{len(comps)} components")
    if not all(is_clique(g, c) for c in comps):
        return _no("disconnected-structure", "a component is not complete")
    a, b = sorted(c.bit_count() for c in comps)
    bound = 2**a - 1
    if b < bound:
        return _no("disconnected-inequality", f"{b} = b >= 2^a-1 = 2^{a}-1 = {bound} fails")
    source = OCCURRING_COMPONENT_SIZES.get((a, b))
    if source is None:
        return UNKNOWN
    return Status(Verdict.OCCURRING, source, f"complete components of sizes {a} and {b}")


@dataclass(frozen=True)
class DiameterThreePartition:
    p: int
    rho1: int
    rho2: int
    rho3: int
    rho4: int

    @property
    def near(self) -> int:
        return (self.rho1 | self.rho2).bit_count()

    @property
    def far(self) -> int:
        return (self.rho3 | self.rho4).bit_count()

    def violations(self) -> list[str]:
        out = []
        n3 = self.rho3.bit_count()
        if n3 < 3:
            out.append(f"|rho3|={n3}<3")
        if self.near > self.far:
            out.append(f"|rho1∪rho2|={self.near}>{self.far}=|rho3∪rho4|")
        if self.far < 2**self.near:
            out.append(f"{self.far}=|rho3∪rho4|>=2^|rho1∪rho2|=2^{self.near}={2**self.near} fails")
        return out


def diameter_three_partitions(g: Graph) -> list[DiameterThreePartition]:
    """One partition per vertex that has a vertex at distance three."""
    if diameter(g) != 3:
        raise ValueError("diameter-three partitions need a graph of diameter 3")
    out = []
    for p in range(g.order):
        dist = distances_from(g, p)
        if max(dist) != 3:
            continue
        at = [sum(1 << v for v in range(g.order) if dist[v] == d) for d in range(4)]
        rho3, rho4 = at[2], at[3]
        rho2 = sum(1 << v for v in bits(at[1]) if g.adj[v] & rho3)
        rho1 = at[0] | (at[1] & ~rho2)
        out.append(DiameterThreePartition(p, rho1, rho2, rho3, rho4))
    return out


def rule_diameter3(g: Graph) -> Status | None:
    """Rules a diameter-three graph out only if every basepoint fails."""
    if g.order < 4 or diameter(g) != 3:
        return None
    parts = diameter_three_partitions(g)
    if any(not p.violations() for p in parts):
        return None
    witness = min(parts, key=lambda p: (p.near, p.p))
    return _no("diameter3", "; ".join(witness.violations()))


def rule_cut_vertices(g: Graph) -> Status | None:
    n = cut_vertices(g).bit_count()
    if n < 2:
        return None
    return _no("cut-vertices", f"{n} cut vertices")


def recognize_gamma_kt(g: Graph) -> tuple[int, int] | None:
    """``(k, t)`` if ``g`` is two cliques joined by a matching saturating the smaller."""
    n = g.order
    if n < 2:
        return None
    full = g.all_vertices
    for k in range(n - 1, (n + 1) // 2 - 1, -1):
        t = n - k
        for a_set in combinations(range(n), k):
            a = sum(1 << v for v in a_set)
            b = full & ~a
            if not (is_clique(g, a) and is_clique(g, b)):
                continue
            hits = [g.adj[v] & a for v in bits(b)]
            if all(h.bit_count() == 1 for h in hits) and len(set(hits)) == t:
                return k, t
    return None


def rule_gamma_kt(g: Graph) -> Status | None:
    kt = recognize_gamma_kt(g)
    if kt is None:
        return None
    k, t = kt
    if t == 1 or k == t == 2:
        return Status(Verdict.OCCURRING, "gamma-kt", f"Gamma_{k},{t}")
    return _no("gamma-kt", f"Gamma_{k},{t}")


RULES: tuple[tuple[str, Callable[[Graph], Status | None]], ...] = (
    ("palfy", rule_palfy),
    ("odd-cycle", rule_odd_cycle),
    ("disconnected", rule_disconnected),
    ("cut-vertices", rule_cut_vertices),
    ("diameter3", rule_diameter3),
    ("gamma-kt", rule_gamma_kt),
)


# -- knowledge base -------------------------------------------------------------


@dataclass(frozen=True)
class Fact:
    graph: Graph
    verdict: Verdict
    source: str
    quote: str = ""

    @property
    def status(self) -> Status:
        return Status(self.verdict, self.source, self.quote)


_FACT_LINE = re.compile(r"^(\S+)\s+(OCCURRING|NONOCCURRING)\s+(\S+)(?:\s+(.*))?$")


@dataclass
class KnowledgeBase:
    facts: dict[CanonicalForm, Fact] = field(default_factory=dict)

    @classmethod
    def load(cls, path: Path | str, validate: bool = True) -> KnowledgeBase:
        facts: dict[CanonicalForm, Fact] = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = _FACT_LINE.match(line)
            if not m:
                raise OccurrenceError(f"{path}:{lineno}: malformed fact line")
            g6, verdict, source, quote = m.groups()
            quote = " ".join(shlex.split(quote)) if quote else ""
            fact = Fact(from_graph6(g6), Verdict[verdict], source, quote)
            cls._add(facts, fact, where=f"{path}:{lineno}")
        kb = cls(facts)
        if validate:
            kb.validate()
        return kb

    @classmethod
    def from_facts(cls, facts, validate: bool = True) -> KnowledgeBase:
        table: dict[CanonicalForm, Fact] = {}
        for f in facts:
            cls._add(table, f, where=f.source)
        kb = cls(table)
        if validate:
            kb.validate()
        return kb

    @staticmethod
    def _add(table: dict, fact: Fact, where: str) -> None:
        if fact.graph.order > MAX_STATUS_ORDER:
            raise OccurrenceError(f"{where}: fact graph has order {fact.graph.order} > 7")
        form = canonical_form(fact.graph)
        if form in table:
            raise OccurrenceError(
                f"{where}: {to_graph6(fact.graph)} duplicates the fact tagged {table[form].source}"
            )
        table[form] = fact

    def without(self, *graphs: Graph) -> KnowledgeBase:
        """A copy with the facts about ``graphs`` (up to isomorphism) dropped."""
        drop = {canonical_form(g) for g in graphs}
        return KnowledgeBase({k: f for k, f in self.facts.items() if k not in drop})

    def lookup(self, g: Graph) -> Fact | None:
        return self.facts.get(canonical_form(g))

    def __len__(self) -> int:
        return len(self.facts)

    @cached_property
    def oracle(self) -> Oracle:
        return Oracle(self)

    def validate(self) -> None:
        """Reject facts contradicted by any rule, including occurring facts hit by any rule."""
        problems = []
        for fact in self.facts.values():
            for name, st in Oracle(self).rule_statuses(fact.graph):
                if st.decided and st.verdict is not fact.verdict:
                    problems.append(
                        f"fact {to_graph6(fact.graph)} [{fact.source}] says {fact.verdict.value}"
                        f" but rule {name} says {st}"
                    )
        if problems:
            raise OccurrenceError("; ".join(problems))


# -- the oracle -----------------------------------------------------------------


class Oracle:
    """Memoized status evaluation against one knowledge-base snapshot.

    With ``check_all`` every rule runs on every query and any disagreement
    between decisive rules or with the knowledge base raises.
    """

    def __init__(self, kb: KnowledgeBase | None = None, check_all: bool = False):
        self.kb = kb if kb is not None else KnowledgeBase()
        self.check_all = check_all
        self._cache: dict[CanonicalForm, Status] = {}

    def __call__(self, g: Graph) -> Status:
        return self.status(g)

    def status(self, g: Graph) -> Status:
        if g.order > MAX_STATUS_ORDER:
            raise ValueError(f"status is defined for order <= {MAX_STATUS_ORDER}")
        form = canonical_form(g)
        hit = self._cache.get(form)
        if hit is None:
            hit = self._cache[form] = self._evaluate(canonical_graph(g))
        return hit

    def rule_statuses(self, g: Graph) -> list[tuple[str, Status]]:
        out = []
        for name, rule in RULES:
            st = rule(g)
            if st is not None:
                out.append((name, st))
        st = self.rule_direct_product(g)
        if st is not None:
            out.append(("direct-product", st))
        return out

    def _evaluate(self, g: Graph) -> Status:
        fact = self.kb.lookup(g)
        if self.check_all:
            decided = [(n, s) for n, s in self.rule_statuses(g) if s.decided]
            verdicts = {s.verdict for _, s in decided}
            if fact is not None:
                verdicts.add(fact.verdict)
            if len(verdicts) > 1:
                raise OccurrenceError(f"rules disagree on {to_graph6(g)}: {decided} vs {fact}")
            if decided:
                return decided[0][1]
            return fact.status if fact is not None else UNKNOWN
        for name, rule in RULES:
            st = rule(g)
            if st is not None and st.decided:
                return self._agree(g, st, fact)
        st = self.rule_direct_product(g)
        if st is not None:
            return self._agree(g, st, fact)
        return fact.status if fact is not None else UNKNOWN

    @staticmethod
    def _agree(g: Graph, st: Status, fact: Fact | None) -> Status:
        if fact is not None and fact.verdict is not st.verdict:
            raise OccurrenceError(
                f"fact {to_graph6(g)} [{fact.source}] says {fact.verdict.value} but rule says {st}"
            )
        return st

    def rule_direct_product(self, g: Graph) -> Status | None:
        """Occurring when ``g`` splits as a join of two occurring graphs."""
        parts = components(complement(g))
        if len(parts) < 2:
            return None
        first, rest = parts[0], parts[1:]
        for pick in range(1 << len(rest)):
            side = first
            for i in bits(pick):
                side |= rest[i]
            other = g.all_vertices & ~side
            if not other:
                continue
            left, right = induced(g, side), induced(g, other)
            if (
                self.status(left).verdict is Verdict.OCCURRING
                and self.status(right).verdict is Verdict.OCCURRING
            ):
                a, b = sorted((to_graph6(canonical_graph(left)), to_graph6(canonical_graph(right))))
                return Status(Verdict.OCCURRING, "direct-product", f"join of {a} and {b}")
        return None


def status(g: Graph, kb: KnowledgeBase | None = None) -> Status:
    return (kb if kb is not None else _EMPTY_KB).oracle(g)


_EMPTY_KB = KnowledgeBase()
