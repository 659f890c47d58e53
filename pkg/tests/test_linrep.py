import random

import pytest
from hypothesis import given, settings, strategies as st

from matpaint.corpus import complete_graph, random_representation
from matpaint.errors import InvalidDependence, NotACircuit, PreconditionViolated, TooLarge
from matpaint.fields import GF2, GF3, GF4, REGULAR
from matpaint.graphs import incidence_family
from matpaint.linrep import (
    Dependence,
    Representation,
    brute_force_representable,
    circuit_dependence,
    combine,
    is_dependence,
    matroid_from_representation,
    nullspace,
    peel_dependence,
    rescale_columns,
    support_is_scrawl_check,
    transform_rows,
    vector_rank,
)
from matpaint.minors import build_fano, build_fano_dual, build_uniform, fano_representation
from oracles import SmallField, column_matroid_circuits

U24_GF3 = Representation.from_rows(GF3, "abcd", [[1, 0, 1, 1], [0, 1, 1, 2]])


def test_identity_gives_free_matroid():
    rep = Representation.from_rows(GF3, "ab", [[1, 0], [0, 1]])
    M = matroid_from_representation(rep)
    assert M.rank == 2 and M.circuits == ()


def test_u24_from_gf3_matrix():
    M = matroid_from_representation(U24_GF3)
    assert M == build_uniform(2, 4)


def test_fano_from_all_nonzero_vectors():
    F = build_fano()
    want = column_matroid_circuits(SmallField(2), fano_representation().columns)
    assert set(F.circuits) == want
    sizes = sorted(len(c) for c in F.circuits)
    assert sizes == [3] * 7 + [4] * 7
    assert F.dual.dual == F


def test_circuit_dependence_examples():
    dep = circuit_dependence(U24_GF3, "abc")
    assert dict(dep.coefficients) == {"a": 1, "b": 1, "c": 2}
    equal = Representation.from_rows(GF3, "ab", [[2, 2]])
    assert dict(circuit_dependence(equal, "ab").coefficients) == {"a": 1, "b": 2}
    tri = incidence_family(complete_graph(3), GF2)
    assert set(circuit_dependence(tri, tri.ground).coefficients.values()) == {1}
    with pytest.raises(NotACircuit):
        circuit_dependence(U24_GF3, "ab")
    with pytest.raises(NotACircuit):
        circuit_dependence(U24_GF3, "abcd")


def test_support_is_scrawl_examples():
    assert support_is_scrawl_check(U24_GF3, Dependence(GF3, {}))
    assert support_is_scrawl_check(U24_GF3, circuit_dependence(U24_GF3, "abd"))
    k4 = incidence_family(complete_graph(4), GF3)
    M = matroid_from_representation(k4)
    o1, o2 = M.circuits[0], M.circuits[-1]
    dep = combine(GF3, [(1, circuit_dependence(k4, o1)), (2, circuit_dependence(k4, o2))])
    assert support_is_scrawl_check(k4, dep)
    used = peel_dependence(k4, dep, M)
    assert frozenset().union(*used) == dep.support
    with pytest.raises(InvalidDependence):
        support_is_scrawl_check(U24_GF3, Dependence(GF3, {"a": 1}))


def test_oracle_examples():
    U24 = build_uniform(2, 4)
    assert brute_force_representable(U24, GF2) is None
    rep = brute_force_representable(U24, GF3)
    assert rep is not None and matroid_from_representation(rep) == U24
    assert brute_force_representable(build_fano(), GF3) is None
    assert brute_force_representable(build_fano(), GF2) is not None
    assert brute_force_representable(build_fano_dual(), GF4) is not None
    assert brute_force_representable(build_uniform(2, 5), GF3) is None
    assert brute_force_representable(build_uniform(2, 5), GF4) is not None
    assert brute_force_representable(build_uniform(3, 5), GF4) is not None
    with pytest.raises(TooLarge):
        brute_force_representable(build_uniform(2, 9), GF3)
    with pytest.raises(PreconditionViolated):
        brute_force_representable(U24, REGULAR)


@pytest.mark.parametrize("ring", [GF2, GF3, GF4], ids=lambda r: r.tag)
def test_column_matroid_against_coefficient_search(ring):
    rng = random.Random(11)
    q = SmallField(len(ring.elements))
    for _ in range(15):
        rep = random_representation(rng, ring, max_rank=3, max_elements=5)
        M = matroid_from_representation(rep)
        assert set(M.circuits) == column_matroid_circuits(q, rep.columns)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([GF2, GF3, GF4]))
def test_random_representations(seed, ring):
    rng = random.Random(seed)
    rep = random_representation(rng, ring)
    M = matroid_from_representation(rep)
    # the oracle finds a witness and the witness represents M
    found = brute_force_representable(M, ring)
    assert found is not None and matroid_from_representation(found) == M
    # unit column scaling and invertible row operations keep the matroid
    scaled = rescale_columns(rep, {e: rng.choice(ring.units) for e in rep.ground})
    assert matroid_from_representation(scaled) == M
    r = len(rep.rows)
    while True:
        T = [[rng.choice(ring.elements) for _ in range(r)] for _ in range(r)]
        if vector_rank(ring, T) == r:
            break
    assert matroid_from_representation(transform_rows(rep, T)) == M
    # combinations of circuit dependences have scrawl supports
    if M.circuits:
        terms = [(rng.choice(ring.elements), circuit_dependence(rep, o)) for o in M.circuits[:4]]
        dep = combine(ring, terms)
        assert is_dependence(rep, dep)
        assert support_is_scrawl_check(rep, dep)


def test_nullspace_spans_dependences():
    vecs = [(1, 0), (0, 1), (1, 1), (1, 2)]
    basis = nullspace(GF3, vecs)
    assert len(basis) == 2
    for lam in basis:
        for i in range(2):
            assert sum(l * v[i] for l, v in zip(lam, vecs)) % 3 == 0
