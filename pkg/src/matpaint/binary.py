"""Characterizations of binary matroids, each decided independently.

Every predicate returns a :class:`Verdict`, which is truthy iff the property
holds and carries the first counterexample found otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .fields import GF2
from .matroid import Matroid, bits, fundamental_circuit_mask, mask_key
from .minors import build_uniform, has_minor_isomorphic
from .painting import constant_painting, verify_painting


@dataclass
class Verdict:
    holds: bool
    witness: str = ""

    def __bool__(self):
        return self.holds


def _show(M: Matroid, m: int) -> str:
    return "{" + ",".join(M.sorted_labels(m)) + "}"


def p1_binary_paintable(M: Matroid) -> Verdict:
    """The all-ones GF(2) painting (the only normalized candidate) is valid."""
    report = verify_painting(M, constant_painting(M, GF2))
    if report.ok:
        return Verdict(True)
    o, b, _ = report.failures[0]
    return Verdict(False, f"circuit {{{','.join(o)}}} cocircuit {{{','.join(b)}}}")


def _intersection_sizes(M: Matroid, bad: Callable[[int], bool]) -> Verdict:
    for o in M.circuit_masks:
        for b in M.cocircuit_masks:
            if bad((o & b).bit_count()):
                return Verdict(False, f"circuit {_show(M, o)} cocircuit {_show(M, b)}")
    return Verdict(True)


def p2_even_intersections(M: Matroid) -> Verdict:
    return _intersection_sizes(M, lambda k: k % 2 == 1)


def p3_no_triple(M: Matroid) -> Verdict:
    return _intersection_sizes(M, lambda k: k == 3)


def p4_no_u24_minor(M: Matroid) -> Verdict:
    w = has_minor_isomorphic(M, build_uniform(2, 4))
    if w is None:
        return Verdict(True)
    return Verdict(False, f"contract {sorted(w.spec.contract)} delete {sorted(w.spec.delete)}")


def _contains_circuit(M: Matroid, m: int) -> bool:
    return any(c & m == c for c in M.circuit_masks)


def disjoint_decomposition(M: Matroid, m: int) -> list[int] | None:
    """Split m into disjoint circuits, least circuit first, or None.

    Tries circuits through the least remaining element in lexicographic
    order and backtracks, so None means no decomposition exists at all.
    """
    if m == 0:
        return []
    low = m & -m
    for c in M.circuit_masks:
        if c & low and c & m == c:
            rest = disjoint_decomposition(M, m & ~c)
            if rest is not None:
                return [c] + rest
    return None


def p5_symdiff_pair(M: Matroid) -> Verdict:
    circ = M.circuit_masks
    for i, a in enumerate(circ):
        for b in circ[i:]:
            s = a ^ b
            if s and not _contains_circuit(M, s):
                return Verdict(False, f"{_show(M, a)} xor {_show(M, b)} = {_show(M, s)}")
    return Verdict(True)


def p6_symdiff_pair_disjoint(M: Matroid) -> Verdict:
    circ = M.circuit_masks
    for i, a in enumerate(circ):
        for b in circ[i:]:
            if disjoint_decomposition(M, a ^ b) is None:
                return Verdict(False, f"{_show(M, a)} xor {_show(M, b)}")
    return Verdict(True)


def circuit_xor_span(M: Matroid) -> list[int]:
    """Every symmetric difference of a finite family of circuits.

    This is the GF(2) span of the circuit vectors, enumerated by closure, so
    all finite families are covered without listing them.
    """
    span = {0}
    for c in M.circuit_masks:
        if c not in span:
            span |= {s ^ c for s in span}
    return sorted(span, key=mask_key)


def p7_symdiff_family(M: Matroid) -> Verdict:
    for s in circuit_xor_span(M):
        if s and not _contains_circuit(M, s):
            return Verdict(False, f"family symmetric difference {_show(M, s)}")
    return Verdict(True)


def p8_symdiff_family_disjoint(M: Matroid) -> Verdict:
    for s in circuit_xor_span(M):
        if disjoint_decomposition(M, s) is None:
            return Verdict(False, f"family symmetric difference {_show(M, s)}")
    return Verdict(True)


def _decomposes_at(M: Matroid, s: int) -> Verdict:
    for o in M.circuit_masks:
        acc = 0
        for i in bits(o & ~s):
            acc ^= fundamental_circuit_mask(M, s, 1 << i)
        if acc != o:
            return Verdict(False, f"base {_show(M, s)} circuit {_show(M, o)}")
    return Verdict(True)


def p9_fundamental_decomposition(M: Matroid) -> Verdict:
    for s in M.base_masks:
        v = _decomposes_at(M, s)
        if not v:
            return v
    return Verdict(True)


def p10_single_base_decomposition(M: Matroid, base: Iterable[str] | None = None) -> Verdict:
    """Condition 9 at one base only (the least base by default)."""
    if base is None:
        s = M.extend_to_base(0)
    else:
        from .matroid import _base_mask
        s = _base_mask(M, base)
    return _decomposes_at(M, s)


PREDICATES: dict[str, Callable[[Matroid], Verdict]] = {
    "p1": p1_binary_paintable,
    "p2": p2_even_intersections,
    "p3": p3_no_triple,
    "p4": p4_no_u24_minor,
    "p5": p5_symdiff_pair,
    "p6": p6_symdiff_pair_disjoint,
    "p7": p7_symdiff_family,
    "p8": p8_symdiff_family_disjoint,
    "p9": p9_fundamental_decomposition,
    "p10": p10_single_base_decomposition,
}

EQUIVALENT = tuple(f"p{i}" for i in range(1, 10))


def evaluate(M: Matroid, names: Iterable[str] = tuple(PREDICATES)) -> dict[str, Verdict]:
    return {name: PREDICATES[name](M) for name in names}


def sweep(M: Matroid) -> tuple[bool, dict[str, Verdict]]:
    """Evaluate p1-p9; the bool says whether they all agree."""
    verdicts = evaluate(M, EQUIVALENT)
    values = {bool(v) for v in verdicts.values()}
    return len(values) == 1, verdicts
