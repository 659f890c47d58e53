import random

import networkx as nx
import pytest

from matpaint.acceptance import connected_graphs, random_graphs
from matpaint.corpus import complete_graph, wheel
from matpaint.errors import PreconditionViolated
from matpaint.fields import GF2, GF3, REGULAR
from matpaint.graphs import (
    DirectedGraph,
    bonds,
    cycle_matroid,
    cyclic_order,
    graph_signing,
    incidence_family,
)
from matpaint.linrep import matroid_from_representation
from matpaint.minors import build_uniform
from matpaint.painting import painting_sums, verify_painting

TRIANGLE = DirectedGraph.from_edges([("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])


def nx_cycles(G: DirectedGraph) -> set[frozenset]:
    """Edge sets of cycles of a simple graph, via networkx."""
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    label = {}
    for e, s, t in G.edges:
        H.add_edge(s, t)
        label[frozenset((s, t))] = e
    out = set()
    for cyc in nx.simple_cycles(H):
        out.add(frozenset(label[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] for i in range(len(cyc))))
    return out


def test_cycle_matroid_examples():
    T = cycle_matroid(TRIANGLE)
    assert T == build_uniform(2, 3)
    tree = DirectedGraph.from_edges([("a", "1", "2"), ("b", "1", "3")])
    assert cycle_matroid(tree).circuits == ()
    K4 = cycle_matroid(complete_graph(4))
    assert sorted(len(c) for c in K4.circuits) == [3, 3, 3, 3, 4, 4, 4]


def test_multigraph_cycles():
    G = DirectedGraph.from_edges([("l", "1", "1"), ("p", "1", "2"), ("q", "2", "1"), ("r", "2", "3")])
    M = cycle_matroid(G)
    assert set(M.circuits) == {frozenset("l"), frozenset("pq")}
    assert M.loops == frozenset("l")
    assert M.coloops == frozenset("r")


def test_duplicate_labels_rejected():
    with pytest.raises(PreconditionViolated):
        DirectedGraph.from_edges([("a", "1", "2"), ("a", "2", "3")])


def test_cycles_against_networkx():
    for name, G in connected_graphs(5):
        assert set(cycle_matroid(G).circuits) == nx_cycles(G), name


def test_bonds_are_cocircuits():
    graphs = [g for _, g in connected_graphs(4)] + [g for _, g in random_graphs(random.Random(2), 30, 8)]
    for G in graphs:
        M = cycle_matroid(G)
        assert {b for b, _ in bonds(G)} == set(M.cocircuits)


def test_incidence_family():
    edge = incidence_family(DirectedGraph.from_edges([("e", "s", "t")]), GF3)
    assert sorted(edge.columns["e"]) == [1, 2]  # +1 at t, -1 at s
    assert matroid_from_representation(incidence_family(TRIANGLE, GF3)) == cycle_matroid(TRIANGLE)
    loop = incidence_family(DirectedGraph.from_edges([("l", "v", "v")]), GF3)
    assert set(loop.columns["l"]) == {0}
    for _, G in connected_graphs(4) + random_graphs(random.Random(5), 30, 7):
        for ring in (GF2, GF3):
            assert matroid_from_representation(incidence_family(G, ring)) == cycle_matroid(G)


def test_signing_examples():
    s = graph_signing(TRIANGLE)
    o = frozenset("abc")
    assert s.painting.circuit_values[o] == {"a": 1, "b": 1, "c": 1}
    for b, vals in s.painting.cocircuit_values.items():
        assert sum(vals[e] * s.painting.circuit_values[o][e] for e in b) == 0
        assert sorted(vals.values()) == [-1, 1]
    # d(e) = 1 when e points into the side holding the least vertex
    bridge = DirectedGraph.from_edges([("e", "2", "1")])
    s = graph_signing(bridge)
    assert s.painting.circuit_values == {}
    assert s.painting.cocircuit_values == {frozenset("e"): {"e": 1}}
    s = graph_signing(bridge.reorient("e"))
    assert s.painting.cocircuit_values == {frozenset("e"): {"e": -1}}


def test_k4_random_orientation():
    rng = random.Random(42)
    G = complete_graph(4)
    for e in G.edge_labels:
        if rng.random() < 0.5:
            G = G.reorient(e)
    s = graph_signing(G)
    M = cycle_matroid(G)
    report = verify_painting(M, s.painting)
    assert report.ok and len(M.circuits) == 7 and len(M.cocircuits) == 7


def test_cyclic_orders_close_and_ignore_directions():
    G = wheel(4)
    M = cycle_matroid(G)
    flipped = G
    for e in G.edge_labels[::2]:
        flipped = flipped.reorient(e)
    for o in M.circuits:
        order = cyclic_order(G, o)
        assert order[0][0] == min(o)
        assert all(order[i][2] == order[(i + 1) % len(order)][1] for i in range(len(order)))
        assert [(e, a, b) for e, a, b in cyclic_order(flipped, o)] == list(order)


def test_bond_sides_hold_least_vertex():
    G = wheel(4)
    for cut, side in bonds(G):
        assert min(G.vertices) in side
        crossing = {e for e, s, t in G.edges if (s in side) != (t in side)}
        assert crossing == cut


def test_signings_over_integers_and_reorientation():
    graphs = connected_graphs(4) + random_graphs(random.Random(9), 20)
    for name, G in graphs:
        s = graph_signing(G)
        assert painting_sums(s.painting).ok
        assert s.painting.ring is REGULAR
        for e in G.edge_labels:
            t = graph_signing(G.reorient(e))
            for o, co in s.painting.circuit_values.items():
                for b, db in s.painting.cocircuit_values.items():
                    for x in o & b:
                        assert co[x] * db[x] == t.painting.circuit_values[o][x] * t.painting.cocircuit_values[b][x]


def test_disconnected_graph():
    G = DirectedGraph.from_edges([("a", "1", "2"), ("b", "2", "1"), ("c", "3", "4"), ("d", "4", "5"), ("e", "5", "3")])
    s = graph_signing(G)
    assert verify_painting(cycle_matroid(G), s.painting).ok
    assert {frozenset(side) for side in s.sides.values()} == {frozenset("1"), frozenset("3"), frozenset("34"), frozenset("35")}
