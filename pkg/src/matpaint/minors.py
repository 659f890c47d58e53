"""Named matroids, minor-isomorphism search and excluded-minor tests."""
from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import BadParameters
from .fields import GF2
from .linrep import Representation, matroid_from_representation
from .matroid import Matroid, MinorSpec, bits, minor
from .painting import find_signing


def element_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"e{i:03d}" for i in range(n)]


def build_uniform(k: int, n: int) -> Matroid:
    if not (0 <= k <= n) or n > 12:
        raise BadParameters(f"U({k},{n}) needs 0 <= k <= n <= 12")
    labels = element_labels(n)
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k + 1)] if k < n else []
    return Matroid(labels, _masks=masks)


def fano_representation() -> Representation:
    """GF(2) matrix whose seven columns are the nonzero vectors of GF(2)^3."""
    labels = element_labels(7)
    cols = {e: tuple((v >> r) & 1 for r in range(3)) for e, v in zip(labels, range(1, 8))}
    return Representation(GF2, ("r0", "r1", "r2"), cols)


@lru_cache(maxsize=None)
def build_fano() -> Matroid:
    return matroid_from_representation(fano_representation())


@lru_cache(maxsize=None)
def build_fano_dual() -> Matroid:
    return build_fano().dual


_UNIFORM = re.compile(r"^u(\d+)_(\d+)$")


def build_named(name: str) -> Matroid:
    """Catalog lookup: ``u{k}_{n}``, ``fano``, ``fano_dual``."""
    key = name.strip().lower()
    m = _UNIFORM.match(key)
    if m:
        return build_uniform(int(m.group(1)), int(m.group(2)))
    if key == "fano":
        return build_fano()
    if key == "fano_dual":
        return build_fano_dual()
    raise BadParameters(f"unknown catalog name {name!r}")


@dataclass(frozen=True)
class MinorWitness:
    spec: MinorSpec
    bijection: dict  # minor element -> target element


def element_profile(M: Matroid) -> dict[int, tuple]:
    """Per-element multiset of sizes of the circuits and cocircuits through it."""
    prof = {}
    for i in range(len(M.ground)):
        bit = 1 << i
        cs = sorted(c.bit_count() for c in M.circuit_masks if c & bit)
        ds = sorted(d.bit_count() for d in M.cocircuit_masks if d & bit)
        prof[i] = (tuple(cs), tuple(ds))
    return prof


def find_isomorphism(A: Matroid, B: Matroid, *, prune: bool = True) -> dict | None:
    """A bijection ground(A) -> ground(B) mapping circuits onto circuits."""
    n = len(A.ground)
    if n != len(B.ground):
        return None
    if prune and (len(A.circuit_masks) != len(B.circuit_masks) or A.rank != B.rank):
        return None
    if prune:
        pa, pb = element_profile(A), element_profile(B)
        if sorted(pa.values()) != sorted(pb.values()):
            return None
        candidates = {i: [j for j in range(n) if pb[j] == pa[i]] for i in range(n)}
    else:
        candidates = {i: list(range(n)) for i in range(n)}
    a_circ = A.circuit_masks
    b_set = set(B.circuit_masks)
    a_set = set(a_circ)
    b_circ = B.circuit_masks
    image = [0] * n
    used = [False] * n

    def image_of(m):
        out = 0
        for i in bits(m):
            out |= 1 << image[i]
        return out

    def extend(i, placed_a, placed_b):
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            pa_ = placed_a | (1 << i)
            pb_ = placed_b | (1 << j)
            ok = all(image_of(c) in b_set for c in a_circ if c >> i & 1 and c & ~pa_ == 0)
            if ok:
                inv = {image[k]: k for k in bits(pa_)}
                for c in b_circ:
                    if c >> j & 1 and c & ~pb_ == 0:
                        pre = 0
                        for t in bits(c):
                            pre |= 1 << inv[t]
                        if pre not in a_set:
                            ok = False
                            break
            if ok:
                used[j] = True
                if extend(i + 1, pa_, pb_):
                    return True
                used[j] = False
        return False

    if not extend(0, 0, 0):
        return None
    return {A.ground[i]: B.ground[image[i]] for i in range(n)}


def is_isomorphic(A: Matroid, B: Matroid) -> bool:
    return find_isomorphism(A, B) is not None


def _minor_specs(M: Matroid, N: Matroid, prune: bool):
    n, m = len(M.ground), len(N.ground)
    k = n - m
    need = M.rank - N.rank
    dual = M.dual
    for removed in combinations(range(n), k):
        if prune:
            if need < 0 or need > k:
                return
            for cset in combinations(removed, need):
                cm = sum(1 << i for i in cset)
                dm = sum(1 << i for i in removed) & ~cm
                if M.is_independent_mask(cm) and dual.is_independent_mask(dm):
                    yield cm, dm
        else:
            for size in range(k + 1):
                for cset in combinations(removed, size):
                    cm = sum(1 << i for i in cset)
                    yield cm, sum(1 << i for i in removed) & ~cm


def has_minor_isomorphic(M: Matroid, N: Matroid, *, prune: bool = True) -> MinorWitness | None:
    """First minor of M isomorphic to N, in lexicographic (removed set, C) order.

    With pruning, only contraction sets that are independent and deletion
    sets that are coindependent are tried; every minor has such a
    presentation, and it fixes |C| = rank(M) - rank(N).
    """
    if len(N.ground) > len(M.ground):
        return None
    ncirc = len(N.circuit_masks)
    for cm, dm in _minor_specs(M, N, prune):
        spec = MinorSpec(M.labels(cm), M.labels(dm))
        small = minor(M, spec)
        if prune and (len(small.circuit_masks) != ncirc or small.rank != N.rank):
            continue
        iso = find_isomorphism(small, N, prune=prune)
        if iso is not None:
            return MinorWitness(spec, iso)
    return None


TERNARY_EXCLUDED = ("u2_5", "u3_5", "fano", "fano_dual")


def is_ternary_by_excluded_minors(M: Matroid) -> bool:
    return all(has_minor_isomorphic(M, build_named(name)) is None for name in TERNARY_EXCLUDED)


def is_regular_by_minors_and_oracle(M: Matroid, **kwargs) -> bool:
    """Regular iff signable (finite case); decided by the signing search."""
    return find_signing(M, **kwargs) is not None
