from itertools import combinations

import pytest

from matpaint.binary import (
    EQUIVALENT,
    PREDICATES,
    circuit_xor_span,
    disjoint_decomposition,
    evaluate,
    p10_single_base_decomposition,
    p1_binary_paintable,
    p2_even_intersections,
    p4_no_u24_minor,
    p5_symdiff_pair,
    p9_fundamental_decomposition,
    sweep,
)
from matpaint.corpus import complete_graph
from matpaint.fields import GF2
from matpaint.graphs import DirectedGraph, cycle_matroid
from matpaint.matroid import matroid_from_circuits
from matpaint.minors import build_uniform

TRIANGLE = cycle_matroid(DirectedGraph.from_edges([("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]))
U24 = build_uniform(2, 4)
FREE = matroid_from_circuits("ab", [])


def test_examples():
    assert all(evaluate(TRIANGLE).values())
    assert not any(evaluate(U24, EQUIVALENT).values())
    assert all(evaluate(FREE).values())
    assert not p4_no_u24_minor(build_uniform(2, 5))
    assert p4_no_u24_minor(cycle_matroid(complete_graph(4)))
    assert p5_symdiff_pair(build_uniform(2, 2))
    assert not p10_single_base_decomposition(U24, {"a", "b"})


def test_witnesses_point_at_the_failure():
    v = p5_symdiff_pair(U24)
    assert not v and "{c,d}" in v.witness
    assert "cocircuit" in p2_even_intersections(U24).witness
    assert "base" in p9_fundamental_decomposition(U24).witness
    assert p1_binary_paintable(TRIANGLE).witness == ""


def test_triangle_fundamental_decomposition_every_base():
    for base in combinations("abc", 2):
        assert p10_single_base_decomposition(TRIANGLE, set(base))


def test_sweep_against_gf2_oracle(corpus, oracle):
    for entry in corpus:
        agree, verdicts = sweep(entry.matroid)
        assert agree, entry.name
        assert bool(verdicts["p1"]) == oracle.representable(entry.matroid, GF2), entry.name


def test_strengthenings_imply_weaker_forms(corpus):
    for entry in corpus:
        v = evaluate(entry.matroid, ["p5", "p6", "p7", "p8"])
        assert not v["p6"] or v["p5"]
        assert not v["p8"] or v["p7"]


def test_p10_on_every_base_of_binary_matroids(small_corpus, oracle):
    for entry in small_corpus:
        M = entry.matroid
        if oracle.representable(M, GF2):
            assert all(p10_single_base_decomposition(M, b) for b in M.bases)


def test_even_sets_decompose_in_binary_matroids(small_corpus, oracle):
    """Every set meeting all cocircuits evenly splits into disjoint circuits."""
    for entry in small_corpus:
        M = entry.matroid
        if len(M) > 8 or not oracle.representable(M, GF2):
            continue
        for m in range(1 << len(M)):
            if all((m & b).bit_count() % 2 == 0 for b in M.cocircuit_masks):
                parts = disjoint_decomposition(M, m)
                assert parts is not None
                assert sum(parts) == m


def test_span_is_closed_under_xor():
    M = cycle_matroid(complete_graph(4))
    span = set(circuit_xor_span(M))
    assert len(span) == 2 ** 3  # cycle space of K4 has dimension 6 - 4 + 1
    assert all(a ^ b in span for a in span for b in span)


def test_predicate_registry():
    assert list(PREDICATES) == [f"p{i}" for i in range(1, 11)]
    with pytest.raises(KeyError):
        evaluate(U24, ["p11"])
