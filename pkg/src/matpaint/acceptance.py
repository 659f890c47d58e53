"""Property checks run over a corpus, shared by the CLI corpus runner and tests.

Each ``criterion_*`` function returns a :class:`CriterionResult` counting
instances and failures. Every random choice comes from a ``random.Random``
seeded by the caller, so the same seed reproduces the same report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .binary import sweep
from .corpus import CorpusEntry
from .errors import MatroidError, TooLarge
from .fields import GF2, GF3, GF4, Automorphism, Ring
from .graphs import DirectedGraph, cycle_matroid, graph_signing
from .linrep import (
    Representation,
    brute_force_representable,
    matroid_from_representation,
    rescale_columns,
    transform_rows,
    vector_rank,
)
from .matroid import (
    Matroid,
    MinorSpec,
    check_scrawl_axioms,
    circuit_lifts,
    cocircuit_lifts,
    minor_scrawls_match,
)
from .minors import is_ternary_by_excluded_minors
from .painting import (
    PAINTING_NODE_BUDGET,
    EquivalenceWitness,
    apply_equivalence,
    check_equivalence,
    equivalence_witness_f3,
    extract_finite_minor,
    find_painting,
    find_signing,
    induce_painting,
    paint_from_representation,
    representation_from_painting,
    scalar_between,
    verify_painting,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        return (f"[{status}] criterion {self.number}: {self.name} "
                f"({self.instances} instances, {len(self.failures)} failures{extra})")


class Oracle:
    """Memoized brute-force representability over GF(2), GF(3), GF(4)."""

    def __init__(self, budget: int | None = None):
        self.budget = budget
        self._cache: dict[tuple[Matroid, str], Representation | None] = {}

    def rep(self, M: Matroid, ring: Ring) -> Representation | None:
        key = (M, ring.tag)
        if key not in self._cache:
            kwargs = {} if self.budget is None else {"budget": self.budget}
            self._cache[key] = brute_force_representable(M, ring, **kwargs)
        return self._cache[key]

    def representable(self, M: Matroid, ring: Ring) -> bool:
        return self.rep(M, ring) is not None


def _representations(entry: CorpusEntry, oracle: Oracle, ring: Ring) -> list[Representation]:
    """Known representations first, then the oracle's witness if different."""
    reps = [entry.representations[ring.tag]] if ring.tag in entry.representations else []
    found = oracle.rep(entry.matroid, ring)
    if found is not None and found not in reps:
        reps.append(found)
    return reps


# -- criteria over corpus entries ---------------------------------------------

def criterion_binary_sweep(entries: Sequence[CorpusEntry], oracle: Oracle) -> CriterionResult:
    res = CriterionResult(1, "p1-p9 agree and match the GF(2) oracle")
    for e in entries:
        res.instances += 1
        agree, verdicts = sweep(e.matroid)
        want = oracle.representable(e.matroid, GF2)
        if not agree:
            res.fail(f"{e.name}: predicates disagree {sorted(k for k, v in verdicts.items() if v)}")
        elif bool(verdicts["p1"]) != want:
            res.fail(f"{e.name}: predicates say {bool(verdicts['p1'])}, oracle says {want}")
    return res


def criterion_painting_soundness(entries: Sequence[CorpusEntry], oracle: Oracle) -> CriterionResult:
    res = CriterionResult(2, "paint_from_representation verifies on every pair")
    for e in entries:
        for ring in (GF2, GF3, GF4):
            for rep in _representations(e, oracle, ring):
                res.instances += 1
                try:
                    report = verify_painting(e.matroid, paint_from_representation(rep, e.matroid))
                except MatroidError as exc:
                    res.fail(f"{e.name}/{ring.tag}: {exc}")
                    continue
                if not report.ok:
                    res.fail(f"{e.name}/{ring.tag}: {len(report.failures)} failing pairs")
    return res


def criterion_round_trip(entries: Sequence[CorpusEntry], oracle: Oracle) -> CriterionResult:
    res = CriterionResult(3, "representation_from_painting rebuilds the matroid")
    for e in entries:
        for ring in (GF2, GF3, GF4):
            for rep in _representations(e, oracle, ring):
                res.instances += 1
                try:
                    p = paint_from_representation(rep, e.matroid)
                    back = representation_from_painting(e.matroid, p, check=False)
                except MatroidError as exc:
                    res.fail(f"{e.name}/{ring.tag}: {exc}")
                    continue
                if matroid_from_representation(back) != e.matroid:
                    res.fail(f"{e.name}/{ring.tag}: circuits differ after round trip")
    return res


def criterion_ternary_minors(entries: Sequence[CorpusEntry], oracle: Oracle,
                             max_elements: int = 8) -> CriterionResult:
    res = CriterionResult(4, "excluded-minor ternary test matches the GF(3) oracle")
    for e in entries:
        if len(e.matroid) > max_elements:
            res.skipped += 1
            continue
        res.instances += 1
        got = is_ternary_by_excluded_minors(e.matroid)
        want = oracle.representable(e.matroid, GF3)
        if got != want:
            res.fail(f"{e.name}: minors say {got}, oracle says {want}")
    return res


def criterion_signing(entries: Sequence[CorpusEntry], oracle: Oracle,
                      budget: int = PAINTING_NODE_BUDGET) -> CriterionResult:
    res = CriterionResult(8, "signable exactly when GF(2) and GF(3) representable")
    for e in entries:
        res.instances += 1
        try:
            got = find_signing(e.matroid, budget=budget) is not None
        except TooLarge as exc:
            res.fail(f"{e.name}: {exc}")
            continue
        want = oracle.representable(e.matroid, GF2) and oracle.representable(e.matroid, GF3)
        if got != want:
            res.fail(f"{e.name}: signing search says {got}, oracles say {want}")
        if e.graphic and not got:
            res.fail(f"{e.name}: graphic matroid not signed")
    return res


def criterion_scrawls(entries: Sequence[CorpusEntry], rng: random.Random,
                      max_elements: int = 8, minors_per_matroid: int = 3) -> CriterionResult:
    res = CriterionResult(9, "scrawl axioms, minimal scrawls and minor scrawls")
    for e in entries:
        M = e.matroid
        if len(M) > max_elements:
            res.skipped += 1
            continue
        res.instances += 1
        report = check_scrawl_axioms(M)
        if not report.ok:
            res.fail(f"{e.name}: {report.failures[0]}")
        for _ in range(minors_per_matroid if len(M) else 0):
            spec = random_minor_spec(M, rng)
            if not minor_scrawls_match(M, spec):
                res.fail(f"{e.name}: minor scrawls differ for {spec}")
    return res


# -- criteria with generated instances ----------------------------------------

def random_minor_spec(M: Matroid, rng: random.Random) -> MinorSpec:
    """Each element is kept, contracted or deleted with equal probability."""
    contract, delete = set(), set()
    for e in M.ground:
        k = rng.randrange(3)
        if k == 1:
            contract.add(e)
        elif k == 2:
            delete.add(e)
    return MinorSpec(frozenset(contract), frozenset(delete))


def criterion_induced_scalars(entries: Sequence[CorpusEntry], oracle: Oracle, rng: random.Random,
                              target: int = 100) -> CriterionResult:
    """Restrictions of non-least lifts differ from the induced painting by one unit."""
    res = CriterionResult(5, "alternative lifts restrict to unit multiples of the induced painting")
    pool = []
    for e in entries:
        for ring in (GF2, GF3, GF4):
            for rep in _representations(e, oracle, ring)[:1]:
                pool.append((e, rep))
    attempts = 0
    while res.instances < target and attempts < 50 * target:
        attempts += 1
        e, rep = pool[rng.randrange(len(pool))]
        M = e.matroid
        if not len(M):
            continue
        spec = random_minor_spec(M, rng)
        p = paint_from_representation(rep, M)
        q = induce_painting(M, p, spec)
        ring = rep.ring
        for o2, vals in q.circuit_values.items():
            for o in circuit_lifts(M, spec, o2)[1:]:
                res.instances += 1
                if scalar_between(ring, {x: p.circuit_values[o][x] for x in o2}, vals) is None:
                    res.fail(f"{e.name} {spec}: circuit lift {sorted(o)} of {sorted(o2)}")
        for b2, vals in q.cocircuit_values.items():
            for b in cocircuit_lifts(M, spec, b2)[1:]:
                res.instances += 1
                if scalar_between(ring, {x: p.cocircuit_values[b][x] for x in b2}, vals) is None:
                    res.fail(f"{e.name} {spec}: cocircuit lift {sorted(b)} of {sorted(b2)}")
    return res


def random_invertible(ring: Ring, r: int, rng: random.Random) -> list[list]:
    while True:
        m = [[rng.choice(ring.elements) for _ in range(r)] for _ in range(r)]
        if vector_rank(ring, m) == r:
            return m


def random_rescaling(M: Matroid, ring: Ring, rng: random.Random) -> EquivalenceWitness:
    units = list(ring.units)
    return EquivalenceWitness(
        {e: rng.choice(units) for e in M.ground},
        {o: rng.choice(units) for o in M.circuits},
        {b: rng.choice(units) for b in M.cocircuits},
        Automorphism(ring, 0),
    )


def criterion_ternary_equivalence(entries: Sequence[CorpusEntry], oracle: Oracle, rng: random.Random,
                                  target: int = 50) -> CriterionResult:
    """Two GF(3) paintings from different routes always get a verified witness.

    Route one paints a row-transformed, column-rescaled copy of a known
    representation and then rescales the painting at random. Route two is
    the painting search run directly on the circuits.
    """
    res = CriterionResult(6, "GF(3) paintings of connected matroids are equivalent")
    for e in entries:
        M = e.matroid
        if len(M) < 2 or not M.is_connected():
            continue
        reps = _representations(e, oracle, GF3)
        if not reps:
            continue
        res.instances += 1
        rep = reps[0]
        r = len(rep.rows)
        moved = transform_rows(rescale_columns(rep, {x: rng.choice(GF3.units) for x in M.ground}),
                               random_invertible(GF3, r, rng))
        p1 = apply_equivalence(M, paint_from_representation(moved, M), random_rescaling(M, GF3, rng))
        p2 = find_painting(M, GF3)
        if p2 is None:
            res.fail(f"{e.name}: painting search found nothing")
            continue
        try:
            w = equivalence_witness_f3(M, p1, p2)
        except MatroidError as exc:
            res.fail(f"{e.name}: {exc}")
            continue
        if not check_equivalence(M, p1, p2, w):
            res.fail(f"{e.name}: witness does not check")
    if res.instances < target:
        res.fail(f"only {res.instances} connected ternary matroids, need {target}")
    return res


def criterion_graph_signing(graphs: Iterable[tuple[str, DirectedGraph]]) -> CriterionResult:
    """Signing sums vanish over Z and survive every single-edge reversal."""
    res = CriterionResult(7, "graph signing verifies and is reorientation invariant")
    for name, G in graphs:
        res.instances += 1
        try:
            s = graph_signing(G)
        except MatroidError as exc:
            res.fail(f"{name}: {exc}")
            continue
        M = cycle_matroid(G)
        if not verify_painting(M, s.painting).ok:
            res.fail(f"{name}: painting condition fails")
        base = _products(s.painting)
        for e in G.edge_labels:
            flipped = graph_signing(G.reorient(e))
            if _products(flipped.painting) != base:
                res.fail(f"{name}: reversing {e} changes a product")
    return res


def _products(p) -> dict:
    out = {}
    for o, co in p.circuit_values.items():
        for b, db in p.cocircuit_values.items():
            for e in o & b:
                out[(o, b, e)] = co[e] * db[e]
    return out


def criterion_extraction(entries: Sequence[CorpusEntry], rng: random.Random,
                         target: int = 100) -> CriterionResult:
    """Traces in the extracted minor are (co)circuits agreeing on the focus set."""
    res = CriterionResult(10, "finite-minor extraction keeps both trace invariants")
    pool = [e for e in entries if e.matroid.circuits and e.matroid.cocircuits]
    while res.instances < target:
        e = pool[rng.randrange(len(pool))]
        M = e.matroid
        O = rng.sample(M.circuits, rng.randint(1, min(3, len(M.circuits))))
        B = rng.sample(M.cocircuits, rng.randint(1, min(3, len(M.cocircuits))))
        res.instances += 1
        try:
            ctx = extract_finite_minor(M, O, B)
        except MatroidError as exc:
            res.fail(f"{e.name}: {exc}")
            continue
        N = ctx.minor
        F = ctx.augmented_focus
        for o in ctx.circuits:
            t = ctx.circuit_traces[o]
            if t not in N.circuits or t & F != o & F or not t <= o:
                res.fail(f"{e.name}: circuit trace of {sorted(o)} is {sorted(t)}")
        for b in ctx.cocircuits:
            t = ctx.cocircuit_traces[b]
            if t not in N.cocircuits or t & F != b & F or not t <= b:
                res.fail(f"{e.name}: cocircuit trace of {sorted(b)} is {sorted(t)}")
    return res


# -- graph families -----------------------------------------------------------

def connected_graphs(max_vertices: int = 5) -> list[tuple[str, DirectedGraph]]:
    """Every connected simple graph on vertices 0..n-1 (n <= max_vertices),
    labelled, edges directed from the smaller vertex to the larger."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for m in range(1 << len(pairs)):
            edges = [(f"e{i}{j}", str(i), str(j)) for k, (i, j) in enumerate(pairs) if m >> k & 1]
            G = DirectedGraph.from_edges(edges, [str(v) for v in range(n)])
            if G.is_connected():
                out.append((f"g{n}-{m}", G))
    return out


def random_graphs(rng: random.Random, count: int = 50, max_vertices: int = 10,
                  max_extra: int = 5) -> list[tuple[str, DirectedGraph]]:
    """Connected random multigraphs: a random spanning tree plus a few extra
    edges (parallel edges and loops allowed), each with a random direction."""
    out = []
    for k in range(count):
        n = rng.randint(2, max_vertices)
        edges = []
        for v in range(1, n):
            edges.append((v, rng.randrange(v)))
        for _ in range(rng.randint(0, max_extra)):
            edges.append((rng.randrange(n), rng.randrange(n)))
        labelled = []
        for i, (a, b) in enumerate(edges):
            if rng.random() < 0.5:
                a, b = b, a
            labelled.append((f"x{i:02d}", str(a), str(b)))
        out.append((f"rg{k:02d}", DirectedGraph.from_edges(labelled)))
    return out


# -- whole suite ----------------------------------------------------------------

def run_suite(entries: Sequence[CorpusEntry], *, seed: int = 0, budget: int | None = None,
              graphs: Sequence[tuple[str, DirectedGraph]] | None = None) -> list[CriterionResult]:
    """All ten criteria over ``entries``; graphs default to the seeded families."""
    oracle = Oracle(budget)
    rng = random.Random(seed)
    search_budget = PAINTING_NODE_BUDGET if budget is None else budget
    if graphs is None:
        graphs = connected_graphs(4) + random_graphs(random.Random(seed), 20, 8)
    results = [
        criterion_binary_sweep(entries, oracle),
        criterion_painting_soundness(entries, oracle),
        criterion_round_trip(entries, oracle),
        criterion_ternary_minors(entries, oracle),
        criterion_induced_scalars(entries, oracle, random.Random(rng.random())),
        criterion_ternary_equivalence(entries, oracle, random.Random(rng.random()), target=0),
        criterion_graph_signing(graphs),
        criterion_signing(entries, oracle, search_budget),
        criterion_scrawls(entries, random.Random(rng.random())),
        criterion_extraction(entries, random.Random(rng.random())),
    ]
    return results
