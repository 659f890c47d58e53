import random

import pytest
from hypothesis import given, settings, strategies as st

from matpaint.acceptance import random_graphs, random_rescaling
from matpaint.corpus import random_representation
from matpaint.errors import AxiomViolation, FormatError
from matpaint.fields import GF2, GF3, GF4, SIXTH_ROOT
from matpaint.formats import (
    parse_graph,
    parse_matrix,
    parse_matroid,
    parse_painting,
    parse_witness,
    serialize_graph,
    serialize_matrix,
    serialize_matroid,
    serialize_painting,
    serialize_witness,
)
from matpaint.graphs import DirectedGraph, graph_signing
from matpaint.minors import build_uniform
from matpaint.painting import equivalence_witness_f3, find_painting, paint_from_representation, apply_equivalence

U24_TEXT = """matroid v1
# the uniform matroid of rank 2 on 4 elements
elements: a b c d
circuit: a b c
circuit: a b d   # trailing comment
circuit: a c d

circuit: b c d
"""


def test_matroid_file():
    M = parse_matroid(U24_TEXT)
    assert M == build_uniform(2, 4)
    text = serialize_matroid(M)
    assert parse_matroid(text) == M
    assert serialize_matroid(parse_matroid(text)) == text


def test_matroid_file_errors():
    with pytest.raises(FormatError):
        parse_matroid("elements: a b\n")
    with pytest.raises(FormatError):
        parse_matroid("matroid v1\ncircuit: a\n")
    with pytest.raises(FormatError):
        parse_matroid("matroid v1\nelements: a a\n")
    with pytest.raises(FormatError):
        parse_matroid("matroid v1\nelements: a\nloop: a\n")
    with pytest.raises(AxiomViolation):
        parse_matroid("matroid v1\nelements: a b c\ncircuit: a b\ncircuit: a b c\n")


def test_matrix_file():
    rep = parse_matrix("field: gf4\ncols: a b c\n1 x x+1\n0 1 x\n")
    assert rep.ring is GF4
    assert rep.columns["b"] == (2, 1)
    text = serialize_matrix(rep)
    assert text == "field: gf4\ncols: a b c\n1 x x+1\n0 1 x\n"
    assert parse_matrix(text) == rep
    with pytest.raises(FormatError):
        parse_matrix("field: gf3\ncols: a b\n1 2 0\n")
    with pytest.raises(FormatError):
        parse_matrix("field: regular\ncols: a\n1\n")
    with pytest.raises(FormatError):
        parse_matrix("1 0\n")


def test_graph_file():
    G = parse_graph("graph v1\nedge: x 1 2\nedge: y 2 1\nvertex: 9\n")
    assert G.vertices == ("1", "2", "9")
    text = serialize_graph(G)
    assert parse_graph(text) == G
    assert serialize_graph(parse_graph(text)) == text
    with pytest.raises(FormatError):
        parse_graph("graph v1\nedge: x 1\n")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([GF2, GF3, GF4]))
def test_random_round_trips(seed, ring):
    rng = random.Random(seed)
    rep = random_representation(rng, ring)
    text = serialize_matrix(rep)
    assert parse_matrix(text) == rep
    p = paint_from_representation(rep)
    ptext = serialize_painting(p)
    assert parse_painting(ptext) == p
    assert serialize_painting(parse_painting(ptext)) == ptext
    (_, G), = random_graphs(rng, 1)
    assert parse_graph(serialize_graph(G)) == G


def test_painting_file_partial_fields():
    for p in (find_painting(build_uniform(2, 4), SIXTH_ROOT),
              graph_signing(DirectedGraph.from_edges([("a", "1", "2"), ("b", "2", "1")])).painting):
        text = serialize_painting(p)
        assert parse_painting(text) == p
    with pytest.raises(FormatError):
        parse_painting("painting v1\nfield: gf3\ncircuit a b: a=1\n")
    with pytest.raises(FormatError):
        parse_painting("painting v1\ncircuit a b: a=1 b=1\n")


def test_witness_file():
    M = build_uniform(2, 4)
    p1 = find_painting(M, GF3)
    p2 = apply_equivalence(M, p1, random_rescaling(M, GF3, random.Random(1)))
    w = equivalence_witness_f3(M, p1, p2)
    text = serialize_witness(w)
    assert parse_witness(text) == w
    assert serialize_witness(parse_witness(text)) == text
