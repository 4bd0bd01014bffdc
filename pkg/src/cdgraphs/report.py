"""Full classification run, the reproducibility checklist, and DOT output."""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from itertools import permutations
from pathlib import Path

from .arith import FactoredInt
from .canonical import canonical_form, is_isomorphic
from .constructions import (
    PrimeLabeling,
    Recipe,
    build_occurring_catalog,
    cd_diameter3,
    cd_semilinear,
    cyclotomic_coprimality,
    graph_from_cd,
    load_recipes,
    verify_factored_value,
)
from .enumeration import (
    APPENDIX_SIZES,
    _label_key,
    appendix_class,
    class_counts,
    eligible_catalog,
    enumerate_all,
    enumerate_connected,
    load_appendix,
    match_appendix_data,
    read_labelled_g6,
)
from .graph import Graph, bipartition, complement, components, num_pairs, two_clique_cover
from .graph6 import from_graph6, to_graph6
from .lemmas import LemmaReport, run_lemma_checks
from .occurrence import KnowledgeBase, Oracle, Verdict, rule_diameter3, rule_odd_cycle

CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)
ALL_COUNTS = (1, 2, 4, 11, 34, 156, 1044)


def _labels(prefix: str, nums) -> list[str]:
    return [f"{prefix}{i}" for i in nums]


EXPECTED_OCCURRING = (
    _labels("A", range(1, 7))
    + _labels("B", (3, 4, 6, 13, 14, 15, 16, 19, 21, 23, 24, 26))
    + _labels("C", (26, 50, 51, 53))
)
EXPECTED_NONOCCURRING = (
    _labels("B", (1, 2, 5))
    + _labels("C", (1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 14, 16))
    + _labels("C", (10, 17, 18, 20))
)
DIAMETER_THREE_C = _labels("C", (1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 14, 16))


# -- classification report ------------------------------------------------------


@dataclass
class Entry:
    label: str
    graph6: str
    appendix: str
    verdict: str
    reason: str | None
    detail: str
    recipe: str | None = None


@dataclass
class Summary:
    connected_total: int
    eligible: int
    occurring: int
    nonoccurring: int
    unknown: int


@dataclass
class CaseSummary:
    case: str
    vertices: list[int]
    survivors: list[list[list[int]]]
    ok: bool


@dataclass
class LemmaSummary:
    label: str
    admissible: list[int]
    strongly_admissible: list[int]
    subgraphs_checked: int
    subgraph_scan_ok: bool
    cases: list[CaseSummary]

    @classmethod
    def of(cls, rep: LemmaReport) -> LemmaSummary:
        return cls(
            rep.label,
            [k for k, ok in rep.admissible.items() if ok],
            [k for k, ok in rep.strongly_admissible.items() if ok],
            rep.subgraphs_checked,
            rep.subgraph_scan_ok,
            [
                CaseSummary(c.case, list(c.vertices), [[list(p) for p in s] for s in c.found], c.ok)
                for c in rep.cases
            ],
        )


@dataclass
class ClassificationReport:
    summary: Summary
    entries: list[Entry]
    disconnected: list[Entry]
    lemmas: list[LemmaSummary] = field(default_factory=list)

    def roster(self, verdict: Verdict) -> list[str]:
        return [e.label for e in self.entries if e.verdict == verdict.value]

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ClassificationReport:
        d = json.loads(text)
        return cls(
            Summary(**d["summary"]),
            [Entry(**e) for e in d["entries"]],
            [Entry(**e) for e in d["disconnected"]],
            [
                LemmaSummary(**{**lm, "cases": [CaseSummary(**c) for c in lm["cases"]]})
                for lm in d["lemmas"]
            ],
        )

    def to_text(self) -> str:
        s = self.summary
        lines = [
            f"connected 7-vertex graphs: {s.connected_total}",
            f"eligible (two-clique cover): {s.eligible}",
            f"occurring {s.occurring}, non-occurring {s.nonoccurring}, unknown {s.unknown}",
            "",
            "disconnected graphs:",
        ]
        lines += [f"  {e.graph6:8} {e.verdict:14} {e.reason or ''} {e.detail}" for e in self.disconnected]
        for cls_ in APPENDIX_SIZES:
            lines += ["", f"appendix {cls_}:"]
            for e in self.entries:
                if e.appendix != cls_:
                    continue
                how = f" <- {e.recipe}" if e.recipe else ""
                why = f" [{e.reason}] {e.detail}" if e.reason else ""
                lines.append(f"  {e.label:4} {e.graph6:8} {e.verdict}{why}{how}")
        for lm in self.lemmas:
            lines += [
                "",
                f"{lm.label}: strongly admissible at {', '.join(f'p{k}' for k in lm.strongly_admissible)};"
                f" {lm.subgraphs_checked} proper subgraphs all non-occurring: {lm.subgraph_scan_ok}",
            ]
            for c in lm.cases:
                lines.append(f"  case {c.case:6} {c.vertices} survivors {c.survivors} {'ok' if c.ok else 'MISMATCH'}")
        return "\n".join(lines) + "\n"


@dataclass
class DataBundle:
    appendix: dict[str, Graph]
    disconnected: dict[str, Graph]
    recipes: list[Recipe]
    kb: KnowledgeBase

    @classmethod
    def load(cls, data_dir: Path | str) -> DataBundle:
        d = Path(data_dir)
        return cls(
            load_appendix(d),
            dict(read_labelled_g6(d / "disconnected.g6")),
            load_recipes(d / "constructions.recipes"),
            KnowledgeBase.load(d / "knowledge_base.facts"),
        )

    @property
    def targets(self) -> dict[str, Graph]:
        return {**self.appendix, **self.disconnected}


def _entry(label: str, g: Graph, st, cls_: str, recipe: str | None) -> Entry:
    return Entry(label, to_graph6(g), cls_, st.verdict.value, st.reason, st.detail, recipe)


def classify_all(data_dir: Path | str, data: DataBundle | None = None) -> ClassificationReport:
    data = data or DataBundle.load(data_dir)
    eligible = eligible_catalog()
    match_appendix_data(eligible, data.appendix)
    oracle = data.kb.oracle
    built = build_occurring_catalog(data.recipes, data.targets, oracle)
    recipe_of = {b.label: str(b.recipe) for b in built}
    entries = [
        _entry(label, g, oracle(g), appendix_class(g).value, recipe_of.get(label))
        for label, g in sorted(data.appendix.items(), key=lambda kv: _label_key(kv[0]))
    ]
    disconnected = [
        _entry(label, g, oracle(g), "-", recipe_of.get(label))
        for label, g in sorted(data.disconnected.items())
    ]
    verdicts = [e.verdict for e in entries]
    summary = Summary(
        len(enumerate_connected(7)),
        len(eligible),
        verdicts.count(Verdict.OCCURRING.value),
        verdicts.count(Verdict.NONOCCURRING.value),
        verdicts.count(Verdict.UNKNOWN.value),
    )
    lemmas = [LemmaSummary.of(r) for r in run_lemma_checks(Path(data_dir), data.kb)]
    return ClassificationReport(summary, entries, disconnected, lemmas)


# -- reproducibility checklist ----------------------------------------------------


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def __str__(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.name} ({self.seconds:.2f}s){': ' + self.detail if self.detail else ''}"


def pairwise_class_count(n: int, connected_only: bool = False) -> int:
    """Isomorphism classes by direct permutation tests; no canonical forms."""
    from .graph import is_connected

    perms = list(permutations(range(n)))
    reps: list[Graph] = []
    for code in range(1 << num_pairs(n)):
        g = Graph(n, code)
        if connected_only and not is_connected(g):
            continue
        if not any(
            r.edges == g.relabel(p).edges
            for r in reps
            if r.edge_count == g.edge_count
            for p in perms
        ):
            reps.append(g)
    return len(reps)


def _fi(*pairs) -> FactoredInt:
    """Factored integer from ``(p, e)`` pairs or bare primes."""
    d: dict[int, int] = {}
    for x in pairs:
        p, e = x if isinstance(x, tuple) else (x, 1)
        d[p] = d.get(p, 0) + e
    return FactoredInt.of(d)


def expected_cd_g3() -> frozenset[FactoredInt]:
    s, t, u, v = 7, 79, 292561, 74912328481
    stuv, uv = (s, t, u, v), (u, v)
    return frozenset(
        {
            _fi(), _fi(3), _fi(5), _fi(3, 5), _fi(*stuv),
            _fi((23, 7), *stuv), _fi(3, (23, 15), *uv), _fi((23, 12), *uv),
            _fi(3, (23, 12), *uv), _fi((23, 12), *stuv), _fi((23, 13), *stuv),
        }
    )  # fmt: skip


def expected_cd_g4() -> frozenset[FactoredInt]:
    s, t, u, v = 7, 23, 89, 599479
    stuv, tuv = (s, t, u, v), (t, u, v)
    return frozenset(
        {
            _fi(), _fi(3), _fi(11), _fi(3, 11), _fi(*stuv),
            _fi((2, 16), *stuv), _fi(3, (2, 33), *tuv), _fi((2, 30), *tuv),
            _fi(3, (2, 30), *tuv), _fi((2, 30), *stuv), _fi((2, 31), *stuv),
        }
    )  # fmt: skip


def _labelled_parts(g: Graph, labeling: PrimeLabeling) -> set[frozenset[int]]:
    from .graph import bits

    return {frozenset(labeling[v] for v in bits(c)) for c in components(g)}


def check_enumeration(data: DataBundle) -> str:
    got = tuple(len(enumerate_connected(n)) for n in range(1, 8))
    assert got == CONNECTED_COUNTS, f"connected counts {got}"
    alls = tuple(len(enumerate_all(n)) for n in range(1, 8))
    assert alls == ALL_COUNTS, f"all-graph counts {alls}"
    for n in range(1, 6):
        assert pairwise_class_count(n, True) == CONNECTED_COUNTS[n - 1], f"pairwise oracle n={n}"
    return "connected counts 1,1,2,6,21,112,853; pairwise oracle agrees for n<=5"


def check_eligibility(data: DataBundle) -> str:
    cat = eligible_catalog()
    assert len(cat) == 85, f"{len(cat)} eligible"
    counts = class_counts(cat)
    assert dict(counts) == APPENDIX_SIZES, f"split {dict(counts)}"
    mapping = match_appendix_data(cat, data.appendix)
    assert len(mapping) == 85
    return "85 eligible, split A/B/C = 6/26/53, appendix data bijects"


def check_disconnected(data: DataBundle) -> str:
    g1 = cd_semilinear(2, 81, _fi(7, 73, 2593, 71119, 262657, 97685839))
    g2 = cd_semilinear(2, 51, _fi(7, 103, 2143, 11119, 131071))
    assert g1 == frozenset({_fi(), _fi(3), _fi((3, 2)), _fi((3, 3)), _fi((3, 4)), _fi(7, 73, 2593, 71119, 262657, 97685839)})
    assert g2 == frozenset({_fi(), _fi(3), _fi(17), _fi(3, 17), _fi(7, 103, 2143, 11119, 131071)})
    d1, lab1 = graph_from_cd(g1)
    d2, lab2 = graph_from_cd(g2)
    assert is_isomorphic(d1, data.disconnected["D1"]) and is_isomorphic(d2, data.disconnected["D2"])
    assert _labelled_parts(d1, lab1) == {frozenset({3}), frozenset({7, 73, 2593, 71119, 262657, 97685839})}
    assert _labelled_parts(d2, lab2) == {frozenset({3, 17}), frozenset({7, 103, 2143, 11119, 131071})}
    st = data.kb.oracle(data.disconnected["D3"])
    assert st.verdict is Verdict.NONOCCURRING and st.reason == "disconnected-inequality", str(st)
    assert "4 = b >= 2^a-1 = 2^3-1 = 7" in st.detail, st.detail
    return f"K1+K6 and K2+K5 built from cd sets; K3+K4: {st.detail}"


def check_constructions(data: DataBundle) -> str:
    built = build_occurring_catalog(data.recipes, data.targets, data.kb.oracle)
    assert len(built) == 24, f"{len(built)} recipes"
    assert cd_diameter3(23, 5, (7, 79, 292561, 74912328481)).degrees == expected_cd_g3()
    assert cd_diameter3(2, 11, (7, 23, 89, 599479)).degrees == expected_cd_g4()
    assert verify_factored_value(_fi(7, 103, 2143, 11119, 131071), 2, 51)
    assert verify_factored_value(_fi(7, 73, 2593, 71119, 262657, 97685839), 2, 81)
    assert verify_factored_value(_fi(7, 79, 292561, 74912328481), 23, 15, 22)
    assert verify_factored_value(_fi(7, 23, 89, 599479), 2, 33)
    assert cyclotomic_coprimality(23, 3, 5) and cyclotomic_coprimality(2, 3, 11)
    return "24 recipes match; cd(G3), cd(G4) and all factorizations exact"


def check_eliminations(data: DataBundle) -> str:
    oracle = Oracle()  # rules only
    app = data.appendix

    def expect(label: str, reason: str, needle: str) -> None:
        st = oracle(app[label])
        assert st.verdict is Verdict.NONOCCURRING and st.reason == reason, f"{label}: {st}"
        assert needle in st.detail, f"{label}: {st.detail!r} lacks {needle!r}"

    expect("B2", "diameter3", "|rho3|=2<3")
    for label in DIAMETER_THREE_C:
        # C1 also has two cut vertices, which the chain reports first
        st = rule_diameter3(app[label])
        assert st is not None and st.verdict is Verdict.NONOCCURRING, f"{label}: {st}"
        assert "4=|rho3∪rho4|>=2^|rho1∪rho2|=2^3=8 fails" in st.detail, f"{label}: {st.detail!r}"
        assert oracle(app[label]).verdict is Verdict.NONOCCURRING
    expect("B1", "cut-vertices", "2 cut vertices")
    expect("C1", "cut-vertices", "2 cut vertices")
    expect("B5", "gamma-kt", "Gamma_5,2")
    expect("C17", "gamma-kt", "Gamma_4,3")
    return "B2, twelve diameter-three C's, B1, C1, B5, C17 eliminated by rules alone"


def check_lemmas(data: DataBundle, data_dir: Path) -> str:
    reports = run_lemma_checks(data_dir, data.kb)
    problems = [p for r in reports for p in r.problems()]
    assert not problems, "; ".join(problems)
    return "; ".join(
        f"{r.label}: strong at {sorted(k for k, ok in r.strongly_admissible.items() if ok)},"
        f" {r.subgraphs_checked} subgraphs, {len(r.cases)} cases"
        for r in reports
    )


def check_partition(data: DataBundle, data_dir: Path) -> str:
    rep = classify_all(data_dir, data)
    s = rep.summary
    assert (s.occurring, s.nonoccurring, s.unknown) == (22, 19, 44), f"{s}"
    key = lambda xs: sorted(xs, key=_label_key)  # noqa: E731
    assert key(rep.roster(Verdict.OCCURRING)) == key(EXPECTED_OCCURRING), "occurring roster"
    assert key(rep.roster(Verdict.NONOCCURRING)) == key(EXPECTED_NONOCCURRING), "non-occurring roster"
    return "22 occurring / 19 non-occurring / 44 unknown, rosters exact"


def check_properties(data: DataBundle, seed: int = 0) -> str:
    rng = random.Random(seed)
    for _ in range(1000):
        n = rng.randint(1, 7)
        g = Graph(n, rng.getrandbits(num_pairs(n)) if n > 1 else 0)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)
    for g in enumerate_all(7):
        assert complement(complement(g)) == g
        a = bipartition(complement(g)) is not None
        b = rule_odd_cycle(g) is None
        c = two_clique_cover(g) is not None
        assert a == b == c
        assert from_graph6(to_graph6(g)) == g
    return "1000 random relabelings; complement, cover and graph6 checks on all 1044"


def verify_paper(data_dir: Path | str) -> list[Check]:
    """Run every reproducibility check; failures are recorded, not raised."""
    data_dir = Path(data_dir)
    checks: list[Check] = []
    try:
        data = DataBundle.load(data_dir)
        load_error = None
    except Exception as exc:  # reported per check below
        data, load_error = None, f"data files failed to load: {exc}"
    steps: list[tuple[str, Callable[[], str]]] = [
        ("enumeration", lambda: check_enumeration(data)),
        ("eligibility and appendix data", lambda: check_eligibility(data)),
        ("disconnected graphs", lambda: check_disconnected(data)),
        ("constructions", lambda: check_constructions(data)),
        ("rule eliminations", lambda: check_eliminations(data)),
        ("C18/C20 lemma checks", lambda: check_lemmas(data, data_dir)),
        ("final partition", lambda: check_partition(data, data_dir)),
        ("property checks", lambda: check_properties(data)),
    ]
    for number, (name, fn) in enumerate(steps, 1):
        start = time.perf_counter()
        if load_error is not None:
            checks.append(Check(number, name, False, load_error, 0.0))
            continue
        try:
            detail, ok = fn(), True
        except Exception as exc:
            detail, ok = f"{type(exc).__name__}: {exc}", False
        checks.append(Check(number, name, ok, detail, time.perf_counter() - start))
    return checks


# -- DOT -------------------------------------------------------------------------


def render_dot(g: Graph, labeling: PrimeLabeling | None = None, name: str = "G") -> str:
    if labeling is not None and len(labeling) != g.order:
        raise ValueError("labeling must name every vertex")
    node = (lambda v: f'"{labeling[v]}"') if labeling else str
    lines = [f'graph "{name}" {{']
    lines += [f"  {node(v)};" for v in range(g.order)]
    lines += [f"  {node(a)} -- {node(b)};" for a, b in g.edge_list()]
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Check",
    "ClassificationReport",
    "DataBundle",
    "classify_all",
    "render_dot",
    "verify_paper",
]
