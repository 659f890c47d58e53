"""Seeded test corpus: catalog matroids, small graphs, random matrix matroids."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .fields import GF2, GF3, GF4, Ring
from .graphs import DirectedGraph, cycle_matroid
from .linrep import Representation, matroid_from_representation
from .matroid import Matroid
from .minors import build_fano, build_fano_dual, build_uniform, element_labels, fano_representation


@dataclass
class CorpusEntry:
    name: str
    matroid: Matroid
    representations: dict[str, Representation] = field(default_factory=dict)
    graph: DirectedGraph | None = None

    @property
    def graphic(self) -> bool:
        return self.graph is not None


def complete_graph(n: int) -> DirectedGraph:
    return DirectedGraph.from_edges(
        [(f"e{i}{j}", str(i), str(j)) for i in range(n) for j in range(i + 1, n)])


def wheel(spokes: int) -> DirectedGraph:
    edges = [(f"s{i}", "0", str(i)) for i in range(1, spokes + 1)]
    edges += [(f"r{i}", str(i), str(i % spokes + 1)) for i in range(1, spokes + 1)]
    return DirectedGraph.from_edges(edges)


def small_graphs() -> dict[str, DirectedGraph]:
    return {
        "mk4": complete_graph(4),
        "mk23": DirectedGraph.from_edges(
            [(f"e{a}{b}", a, b) for a in "01" for b in "234"]),
        "mw4": wheel(4),
        "multi": DirectedGraph.from_edges(
            [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "1"), ("d", "2", "3"), ("e", "3", "1")]),
    }


def random_representation(rng: random.Random, ring: Ring, max_rank: int = 4,
                          max_elements: int = 7) -> Representation:
    r = rng.randint(1, max_rank)
    n = rng.randint(max(r, 2), max_elements)
    labels = element_labels(n)
    elements = ring.elements
    cols = []
    for _ in range(n):
        # mostly nonzero columns, so loops stay rare but present
        col = [rng.choice(elements) for _ in range(r)]
        while rng.random() < 0.9 and not any(col):
            col = [rng.choice(elements) for _ in range(r)]
        cols.append(col)
    matrix = [[col[i] for col in cols] for i in range(r)]
    return Representation.from_rows(ring, labels, matrix)


def random_matrix_matroids(seed: int, count: int, rings=(GF2, GF3), **kwargs) -> list[CorpusEntry]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        ring = rings[i % len(rings)]
        rep = random_representation(rng, ring, **kwargs)
        out.append(CorpusEntry(f"rand-{ring.tag}-{i:03d}", matroid_from_representation(rep),
                               {ring.tag: rep}))
    return out


def named_corpus() -> list[CorpusEntry]:
    out = []
    for n in range(0, 7):
        for k in range(0, n + 1):
            out.append(CorpusEntry(f"u{k}_{n}", build_uniform(k, n)))
    out.append(CorpusEntry("fano", build_fano(), {"gf2": fano_representation()}))
    out.append(CorpusEntry("fano_dual", build_fano_dual()))
    for name, g in small_graphs().items():
        out.append(CorpusEntry(name, cycle_matroid(g), graph=g))
    return out


def build_corpus(seed: int = 0, count: int = 250, gf4_count: int = 20) -> list[CorpusEntry]:
    """Catalog + graphic + ``count`` GF(2)/GF(3) + ``gf4_count`` GF(4) matroids."""
    entries = named_corpus()
    entries += random_matrix_matroids(seed, count)
    gf4 = random_matrix_matroids(seed + 1, gf4_count, rings=(GF4,))
    for e in gf4:
        e.name = e.name.replace("rand-gf4", "rand4-gf4")
    return entries + gf4
