import random

import pytest
from hypothesis import given, settings, strategies as st

from matpaint.corpus import complete_graph
from matpaint.errors import BadParameters
from matpaint.fields import GF3
from matpaint.graphs import cycle_matroid
from matpaint.matroid import MinorSpec, minor
from matpaint.minors import (
    build_fano,
    build_fano_dual,
    build_named,
    build_uniform,
    find_isomorphism,
    has_minor_isomorphic,
    is_isomorphic,
    is_regular_by_minors_and_oracle,
    is_ternary_by_excluded_minors,
)


def test_uniform_builder():
    assert len(build_uniform(2, 4).circuits) == 4
    assert build_uniform(0, 2).loops == frozenset("ab")
    U35 = build_uniform(3, 5)
    assert all(len(c) == 4 for c in U35.circuits) and len(U35.circuits) == 5
    with pytest.raises(BadParameters):
        build_uniform(3, 2)
    with pytest.raises(BadParameters):
        build_uniform(1, 13)


def test_catalog_names():
    assert build_named("u2_4") == build_uniform(2, 4)
    assert build_named("fano") == build_fano()
    assert build_named("fano_dual") == build_fano_dual() == build_fano().dual
    with pytest.raises(BadParameters):
        build_named("k4")


def test_minor_examples():
    w = has_minor_isomorphic(build_uniform(2, 5), build_uniform(2, 4))
    assert w.spec == MinorSpec(delete={"a"})
    w = has_minor_isomorphic(build_uniform(2, 4), build_uniform(2, 4))
    assert w.spec == MinorSpec() and w.bijection == {e: e for e in "abcd"}
    assert has_minor_isomorphic(cycle_matroid(complete_graph(4)), build_uniform(2, 4)) is None
    assert has_minor_isomorphic(build_fano(), build_uniform(2, 4)) is None


def test_witness_maps_circuits_exactly(small_corpus):
    U24 = build_uniform(2, 4)
    for entry in small_corpus:
        w = has_minor_isomorphic(entry.matroid, U24)
        if w is None:
            continue
        N = minor(entry.matroid, w.spec)
        image = {frozenset(w.bijection[e] for e in o) for o in N.circuits}
        assert image == set(U24.circuits)


def test_excluded_minor_examples():
    assert is_ternary_by_excluded_minors(build_uniform(2, 4))
    for name in ("u2_5", "u3_5", "fano", "fano_dual"):
        assert not is_ternary_by_excluded_minors(build_named(name))
    assert is_regular_by_minors_and_oracle(cycle_matroid(complete_graph(4)))
    assert not is_regular_by_minors_and_oracle(build_uniform(2, 4))
    assert not is_regular_by_minors_and_oracle(build_fano())


def test_ternary_matches_oracle(corpus, oracle):
    for entry in corpus:
        assert is_ternary_by_excluded_minors(entry.matroid) == oracle.representable(entry.matroid, GF3), entry.name


def test_pruning_never_changes_answers(small_corpus):
    targets = [build_uniform(2, 4), build_uniform(1, 3), build_uniform(2, 3), build_uniform(0, 1)]
    for entry in small_corpus:
        M = entry.matroid
        if len(M) > 7:
            continue
        for N in targets:
            fast = has_minor_isomorphic(M, N, prune=True)
            slow = has_minor_isomorphic(M, N, prune=False)
            assert (fast is None) == (slow is None), (entry.name, N)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_relabelled_copies_are_isomorphic(small_corpus, data):
    entry = data.draw(st.sampled_from(small_corpus))
    M = entry.matroid
    perm = data.draw(st.permutations(list(M.ground)))
    mapping = dict(zip(M.ground, perm))
    from matpaint.matroid import Matroid

    copy = Matroid(M.ground, [{mapping[e] for e in o} for o in M.circuits])
    iso = find_isomorphism(M, copy)
    assert iso is not None
    assert {frozenset(iso[e] for e in o) for o in M.circuits} == set(copy.circuits)
    assert (find_isomorphism(M, copy, prune=False) is not None)


def test_minor_relation_is_reflexive_and_transitive(small_corpus):
    rng = random.Random(3)
    for entry in small_corpus[:40]:
        M = entry.matroid
        assert has_minor_isomorphic(M, M) is not None
        if len(M) < 2:
            continue
        spec1 = MinorSpec(delete={M.ground[0]})
        N1 = minor(M, spec1)
        e = rng.choice(N1.ground)
        N2 = minor(N1, MinorSpec(contract={e}))
        assert has_minor_isomorphic(N1, N2) is not None
        assert has_minor_isomorphic(M, N2) is not None


def test_non_isomorphic():
    assert not is_isomorphic(build_uniform(2, 4), build_uniform(1, 4))
    assert not is_isomorphic(build_fano(), build_fano_dual())
