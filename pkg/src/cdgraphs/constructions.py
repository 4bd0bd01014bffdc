"""Character degree sets of known constructions and the graphs they realize.

Degree sets are kept in factored form; plain integers only appear when a
factorization is checked against the number it claims to factor.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from .arith import ONE, FactoredInt, FactorError, is_prime, prime_power, trial_factor
from .graph import MAX_ORDER, Graph, GraphError, disjoint_union, join, pair_index
from .graph6 import from_graph6

DegreeSet = frozenset[FactoredInt]
PrimeLabeling = tuple[int, ...]


class ConstructionError(ValueError):
    pass


def degree_set(degrees: Iterable[FactoredInt]) -> DegreeSet:
    ds = frozenset(degrees)
    if ONE not in ds:
        raise ConstructionError("a character degree set always contains 1")
    return ds


def graph_from_cd(ds: DegreeSet) -> tuple[Graph, PrimeLabeling]:
    """Prime graph of a degree set: vertices are primes, sorted ascending."""
    primes = sorted({p for d in ds for p in d.primes})
    if not primes:
        raise ConstructionError("degree set {1} has no primes")
    if len(primes) > MAX_ORDER:
        raise ConstructionError(f"{len(primes)} primes exceed the graph size limit")
    index = {p: k for k, p in enumerate(primes)}
    e = 0
    for d in ds:
        ps = d.primes
        for a in range(len(ps)):
            for b in range(a + 1, len(ps)):
                e |= 1 << pair_index(index[ps[a]], index[ps[b]])
    return Graph(len(primes), e), tuple(primes)


def verify_factored_value(f: FactoredInt, base: int, exp: int, divisor: int = 1) -> bool:
    """Whether ``f`` equals ``(base**exp - 1) / divisor`` exactly."""
    num = base**exp - 1
    if divisor < 1 or num % divisor:
        return False
    return f.value == num // divisor


def _require_prime(*ns: int) -> None:
    for n in ns:
        if not is_prime(n):
            raise ConstructionError(f"{n} is not prime")


def cyclotomic_values(p: int, q: int, r: int) -> tuple[int, int, int]:
    """``Phi_q(p)``, ``Phi_r(p)`` and ``Phi_qr(p)`` for primes ``q < r``."""
    _require_prime(p, q, r)
    if not q < r:
        raise ConstructionError(f"need q < r, got q={q}, r={r}")
    phi_q = (p**q - 1) // (p - 1)
    phi_r = (p**r - 1) // (p - 1)
    num = (p ** (q * r) - 1) * (p - 1)
    den = (p**q - 1) * (p**r - 1)
    if num % den:
        raise ConstructionError("cyclotomic quotient is not integral")
    return phi_q, phi_r, num // den


def cyclotomic_coprimality(p: int, q: int, r: int) -> bool:
    a, b, c = cyclotomic_values(p, q, r)
    return gcd(a, b) == gcd(a, c) == gcd(b, c) == 1


def divisors(n: int) -> list[FactoredInt]:
    out = [ONE]
    for p, e in trial_factor(n).items():
        out = [d * prime_power(p, k) for d in out for k in range(e + 1)]
    return out


def cd_semilinear(q: int, n: int, mult_factorization: FactoredInt) -> DegreeSet:
    """Degrees of GF(q^n) extended by its multiplicative and Galois groups.

    Only checked on the two instances this package uses; the divisor pattern
    is not claimed for general ``(q, n)``.
    """
    _require_prime(q)
    if not verify_factored_value(mult_factorization, q, n):
        raise ConstructionError(f"{mult_factorization} is not {q}^{n} - 1")
    return degree_set([*divisors(n), mult_factorization])


@dataclass(frozen=True)
class Diameter3Degrees:
    p: int
    r: int
    stuv: FactoredInt
    cofactor: FactoredInt  # stuv / (p^2 + p + 1)
    degrees: DegreeSet


def cd_diameter3(p: int, r: int, stuv_primes: Iterable[int]) -> Diameter3Degrees:
    """Eleven degrees of the diameter-three construction with ``q = 3``."""
    q = 3
    primes = tuple(stuv_primes)
    if len(primes) != 4 or len(set(primes)) != 4:
        raise ConstructionError("need four distinct primes s, t, u, v")
    _require_prime(*primes)
    if set(primes) & {p, q, r}:
        raise ConstructionError("s, t, u, v must differ from p, q, r")
    if not cyclotomic_coprimality(p, q, r):
        raise ConstructionError(f"cyclotomic values at p={p} are not pairwise coprime")
    stuv = FactoredInt.from_primes(primes)
    if not verify_factored_value(stuv, p, q * r, p - 1):
        raise ConstructionError(f"{stuv} is not (p^{q * r} - 1)/(p - 1) for p={p}")
    h = p * p + p + 1
    hf = {}
    for s in primes:
        if h % s == 0:
            hf[s] = 1
            h //= s
    if h != 1:
        raise ConstructionError(f"p^2+p+1 does not split over {sorted(primes)}")
    w = stuv / FactoredInt.of(hf)
    three = prime_power(3, 1)
    rr = prime_power(r, 1)
    pp = lambda e: prime_power(p, e)  # noqa: E731
    degrees = degree_set(
        [
            ONE,
            three,
            rr,
            three * rr,
            stuv,
            pp((3 * r - 1) // 2) * stuv,
            three * pp(3 * r) * w,
            pp(3 * r - 3) * w,
            three * pp(3 * r - 3) * w,
            pp(3 * r - 3) * stuv,
            pp(3 * r - 2) * stuv,
        ]
    )
    return Diameter3Degrees(p, r, stuv, w, degrees)


def gamma_kt_graph(k: int, t: int) -> Graph:
    """Cliques on ``k`` and ``t`` vertices with ``a_i ~ b_i`` for ``i < t``.

    Vertices ``0..k-1`` form the larger clique, ``k..k+t-1`` the smaller.
    """
    if not (k >= t >= 1 and k + t <= MAX_ORDER):
        raise ConstructionError(f"need k >= t >= 1 and k + t <= {MAX_ORDER}, got ({k}, {t})")
    g = disjoint_union(Graph.complete(k), Graph.complete(t))
    return Graph(g.order, g.edges | Graph.from_edges(g.order, [(i, k + i) for i in range(t)]).edges)


def clique_union(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    g = Graph.complete(sizes[0])
    for s in sizes[1:]:
        g = disjoint_union(g, Graph.complete(s))
    return g


# -- recipes -----------------------------------------------------------------


@dataclass(frozen=True)
class Recipe:
    label: str
    kind: str
    args: tuple[str, ...]
    note: str = ""

    def __str__(self) -> str:
        return f"{self.kind} {' '.join(self.args)}"


@dataclass
class Built:
    label: str
    graph: Graph
    recipe: Recipe
    labeling: PrimeLabeling | None = None
    degrees: DegreeSet | None = None
    operands: list[Graph] = field(default_factory=list)


def parse_operand(tok: str) -> Graph:
    """``K5``, ``K2+K4`` (disjoint cliques), ``G5,2`` (gamma graph) or ``g6:<code>``."""
    try:
        if tok.startswith("g6:"):
            return from_graph6(tok[3:])
        if tok.startswith("G"):
            k, t = tok[1:].split(",")
            return gamma_kt_graph(int(k), int(t))
        if tok.startswith("K"):
            return clique_union(int(part.lstrip("K")) for part in tok.split("+"))
    except (ValueError, GraphError) as exc:
        raise ConstructionError(f"bad operand {tok!r}: {exc}") from exc
    raise ConstructionError(f"unknown operand {tok!r}")


def _ints(tok: str) -> list[int]:
    return [int(x) for x in tok.split(",")]


def run_recipe(recipe: Recipe) -> Built:
    kind, args = recipe.kind, recipe.args
    if kind == "gamma":
        return Built(recipe.label, gamma_kt_graph(int(args[0]), int(args[1])), recipe)
    if kind == "complete":
        return Built(recipe.label, Graph.complete(int(args[0])), recipe)
    if kind == "join":
        ops = [parse_operand(a) for a in args]
        g = ops[0]
        for h in ops[1:]:
            g = join(g, h)
        return Built(recipe.label, g, recipe, operands=ops)
    if kind == "semilinear":
        q, n = int(args[0]), int(args[1])
        ds = cd_semilinear(q, n, FactoredInt.from_primes(_ints(args[2])))
        g, lab = graph_from_cd(ds)
        return Built(recipe.label, g, recipe, lab, ds)
    if kind == "diameter3":
        d3 = cd_diameter3(int(args[0]), int(args[1]), _ints(args[2]))
        g, lab = graph_from_cd(d3.degrees)
        return Built(recipe.label, g, recipe, lab, d3.degrees)
    raise ConstructionError(f"unknown recipe kind {kind!r}")


def load_recipes(path: Path) -> list[Recipe]:
    out = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line, _, note = raw.partition("#")
        parts = line.split()
        if not parts:
            continue
        if len(parts) < 2:
            raise ConstructionError(f"{path}:{lineno}: expected '<label> <kind> <args...>'")
        out.append(Recipe(parts[0], parts[1], tuple(parts[2:]), note.strip()))
    labels = [r.label for r in out]
    dupes = {x for x in labels if labels.count(x) > 1}
    if dupes:
        raise ConstructionError(f"duplicate recipe labels: {sorted(dupes)}")
    return out


def build_occurring_catalog(
    recipes: list[Recipe], targets: dict[str, Graph], oracle=None
) -> list[Built]:
    """Run every recipe and check it reproduces its labelled target.

    ``oracle``, when given, maps a graph to a status; every join operand must
    then be known to occur.
    """
    from .canonical import is_isomorphic
    from .occurrence import Verdict

    built = []
    failures = []
    for recipe in recipes:
        try:
            b = run_recipe(recipe)
        except (ConstructionError, FactorError, GraphError) as exc:
            failures.append(f"{recipe.label}: {exc}")
            continue
        target = targets.get(recipe.label)
        if target is None:
            failures.append(f"{recipe.label}: no target graph")
        elif not is_isomorphic(b.graph, target):
            failures.append(f"{recipe.label}: recipe output is not isomorphic to its target")
        if oracle is not None:
            for op in b.operands:
                st = oracle(op)
                if st.verdict is not Verdict.OCCURRING:
                    failures.append(f"{recipe.label}: operand {op!r} is {st.verdict.value}")
        built.append(b)
    if failures:
        raise ConstructionError("; ".join(failures))
    return built
