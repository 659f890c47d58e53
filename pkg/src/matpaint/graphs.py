"""Cycle matroids of finite directed multigraphs and their canonical signing."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import PreconditionViolated, TooLarge, VerificationFailed
from .fields import REGULAR, Ring
from .linrep import Representation
from .matroid import Matroid, bits
from .painting import Painting, painting_sums

CYCLE_CAP = 2**16


@dataclass(frozen=True)
class DirectedGraph:
    """Edges are (label, source, target); loops and parallel edges allowed."""

    edges: tuple[tuple[str, str, str], ...]
    extra_vertices: tuple[str, ...] = ()

    def __post_init__(self):
        edges = tuple(sorted((str(e), str(s), str(t)) for e, s, t in self.edges))
        labels = [e for e, _, _ in edges]
        if len(set(labels)) != len(labels):
            raise PreconditionViolated("duplicate edge labels")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "extra_vertices", tuple(sorted(set(map(str, self.extra_vertices)))))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str, str]], vertices: Iterable[str] = ()) -> DirectedGraph:
        return cls(tuple(edges), tuple(vertices))

    @property
    def vertices(self) -> tuple[str, ...]:
        vs = set(self.extra_vertices)
        for _, s, t in self.edges:
            vs.update((s, t))
        return tuple(sorted(vs))

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(e for e, _, _ in self.edges)

    def endpoints(self) -> dict[str, tuple[str, str]]:
        return {e: (s, t) for e, s, t in self.edges}

    def reorient(self, label: str) -> DirectedGraph:
        return DirectedGraph(tuple((e, t, s) if e == label else (e, s, t) for e, s, t in self.edges),
                             self.extra_vertices)

    def components(self) -> list[frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, s, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen: set[str] = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def cycle_edge_masks(G: DirectedGraph, cap: int = CYCLE_CAP) -> list[int]:
    """Edge sets of all cycles (bit i = i-th edge label), via DFS from each
    cycle's least vertex with duplicates from the two directions removed."""
    labels = G.edge_labels
    index = {v: i for i, v in enumerate(G.vertices)}
    adj: dict[str, list[tuple[int, str]]] = {v: [] for v in G.vertices}
    found: set[int] = set()
    for k, (_, s, t) in enumerate(G.edges):
        if s == t:
            found.add(1 << k)
        else:
            adj[s].append((k, t))
            adj[t].append((k, s))

    for v in G.vertices:
        lo = index[v]

        def dfs(u, visited, emask):
            for k, w in adj[u]:
                if emask >> k & 1:
                    continue
                if w == v:
                    found.add(emask | (1 << k))
                    if len(found) > cap:
                        raise TooLarge(f"more than {cap} cycles")
                elif index[w] > lo and w not in visited:
                    visited.add(w)
                    dfs(w, visited, emask | (1 << k))
                    visited.discard(w)

        dfs(v, {v}, 0)
    assert all(m < (1 << len(labels)) for m in found)
    return sorted(found, key=lambda m: tuple(bits(m)))


def cycle_matroid(G: DirectedGraph) -> Matroid:
    """Circuits are the edge sets of cycles; loops are 1-circuits."""
    return Matroid(G.edge_labels, _masks=cycle_edge_masks(G))


def incidence_family(G: DirectedGraph, ring: Ring) -> Representation:
    """Column of edge e is chi(target) - chi(source), rows indexed by vertices."""
    verts = G.vertices
    one, zero = ring.one, ring.zero
    cols = {}
    for e, s, t in G.edges:
        col = []
        for v in verts:
            x = zero
            if v == t:
                x = ring.add(x, one)
            if v == s:
                x = ring.sub(x, one)
            col.append(x)
        cols[e] = tuple(col)
    return Representation(ring, verts, cols)


def _connected(vertices: frozenset[str], adj: dict[str, set[str]]) -> bool:
    if not vertices:
        return False
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in vertices and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def bonds(G: DirectedGraph) -> list[tuple[frozenset[str], frozenset[str]]]:
    """Minimal edge cuts as (edges, side containing the component's least vertex).

    A cut between S and comp - S is a bond iff both sides induce connected
    subgraphs; S always holds the least vertex so each bond appears once.
    """
    adj: dict[str, set[str]] = {v: set() for v in G.vertices}
    for _, s, t in G.edges:
        if s != t:
            adj[s].add(t)
            adj[t].add(s)
    out = []
    for comp in G.components():
        root = min(comp)
        rest = sorted(comp - {root})
        for size in range(len(rest)):
            for extra in combinations(rest, size):
                side = frozenset((root,) + extra)
                other = comp - side
                if not _connected(side, adj) or not _connected(other, adj):
                    continue
                cut = frozenset(e for e, s, t in G.edges if (s in side) != (t in side))
                out.append((cut, side))
    return sorted(out, key=lambda p: sorted(p[0]))


def cyclic_order(G: DirectedGraph, cycle: frozenset[str]) -> tuple[tuple[str, str, str], ...]:
    """Traversal (edge, from, to) of a cycle, starting at its least edge and
    heading toward the lexicographically smaller neighbouring edge.

    A 2-cycle has one neighbouring edge at both ends, so it starts at the
    smaller vertex instead. Either way the order ignores edge directions.
    """
    ends = G.endpoints()
    first = min(cycle)
    s, t = ends[first]
    if s == t:
        return ((first, s, t),)

    def neighbour(at):
        return min(e for e in cycle if e != first and at in ends[e])

    if len(cycle) > 2:
        if neighbour(s) < neighbour(t):
            s, t = t, s
    elif s > t:
        # both ends continue along the same edge; go from the smaller vertex
        s, t = t, s
    order = [(first, s, t)]
    current, prev = t, first
    while len(order) < len(cycle):
        nxt = next(e for e in sorted(cycle) if e != prev and current in ends[e]
                   and e not in {x for x, _, _ in order})
        a, b = ends[nxt]
        other = b if a == current else a
        order.append((nxt, current, other))
        current, prev = other, nxt
    if current != s:
        raise VerificationFailed(f"edges {sorted(cycle)} do not close up")
    return tuple(order)


@dataclass
class GraphSigning:
    graph: DirectedGraph
    painting: Painting
    cyclic_orders: dict = field(default_factory=dict)
    sides: dict = field(default_factory=dict)

    def product(self, o: frozenset, b: frozenset, e: str) -> int:
        return self.painting.circuit_values[o][e] * self.painting.cocircuit_values[b][e]


def graph_signing(G: DirectedGraph) -> GraphSigning:
    """The signing read off the graph.

    c_o(e) = 1 if e is directed along the cyclic order of o, else -1;
    d_b(e) = 1 if e points into the side of b holding the least vertex of
    its component, else -1. Verified over the integers before returning.
    """
    ends = G.endpoints()
    labels = G.edge_labels
    orders = {}
    cvals = {}
    for m in cycle_edge_masks(G):
        cyc = frozenset(labels[i] for i in bits(m))
        order = cyclic_order(G, cyc)
        orders[cyc] = order
        cvals[cyc] = {e: 1 if (a, b) == ends[e] else -1 for e, a, b in order}
    sides = {}
    dvals = {}
    for cut, side in bonds(G):
        sides[cut] = side
        dvals[cut] = {e: 1 if ends[e][1] in side else -1 for e in cut}
    signing = GraphSigning(G, Painting(REGULAR, cvals, dvals), orders, sides)
    report = painting_sums(signing.painting)
    if not report.ok:
        raise VerificationFailed(f"graph signing fails on {report.failures[:3]}")
    return signing
