"""Finite matroids stored by their circuit family.

Element labels are strings kept in sorted order; element ``i`` of the ground
tuple is bit ``i`` of the integer masks used internally. Every "pick an
element" step resolves to the least label, and every "pick a set" step to
the lexicographically least sorted tuple of labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    AxiomViolation,
    BadParameters,
    ElementInBase,
    ElementNotInBase,
    InvalidSpec,
    NotABase,
    PreconditionViolated,
    TooLarge,
    VerificationFailed,
)

# exhaustive (C3)-equivalent validation enumerates 2^n subsets; above this we
# fall back to pairwise circuit elimination
_EQUICARDINAL_LIMIT = 16
SCRAWL_BUDGET = 2**12


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal nonzero masks, sorted lexicographically."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (m.bit_count(), mask_key(m))):
        if m and not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept, key=mask_key)


class Matroid:
    """A finite matroid given by its circuits.

    Use :func:`matroid_from_circuits` for validated construction; the
    constructor itself trusts its input unless ``validate=True``.
    """

    def __init__(self, ground: Iterable[str], circuits: Iterable[Iterable[str]] = (),
                 *, validate: bool = False, _masks: Iterable[int] | None = None):
        ground = [str(e) for e in ground]
        labels = tuple(sorted(set(ground)))
        if len(labels) != len(ground):
            dupes = sorted({e for e in ground if ground.count(e) > 1})
            raise BadParameters(f"duplicate element labels: {dupes}")
        self.ground = labels
        self.index = {e: i for i, e in enumerate(labels)}
        self.full = (1 << len(labels)) - 1
        if _masks is None:
            _masks = [self.mask(c) for c in circuits]
        masks = sorted(set(_masks), key=mask_key)
        self._masks = tuple(masks)
        self._mask_set = frozenset(masks)
        if validate:
            self._validate()

    # -- label/mask conversion -------------------------------------------

    def mask(self, labels: Iterable[str]) -> int:
        if isinstance(labels, str):
            labels = (labels,)
        m = 0
        for e in labels:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise BadParameters(f"{e!r} is not in the ground set") from None
        return m

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in bits(mask))

    def sorted_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in bits(mask))

    # -- basic structure ---------------------------------------------------

    def __len__(self):
        return len(self.ground)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self._mask_set == other._mask_set

    def __hash__(self):
        return hash((self.ground, self._mask_set))

    def __repr__(self):
        return f"Matroid(n={len(self)}, rank={self.rank}, circuits={len(self._masks)})"

    @property
    def circuit_masks(self) -> tuple[int, ...]:
        return self._masks

    @cached_property
    def circuits(self) -> tuple[frozenset[str], ...]:
        return tuple(self.labels(m) for m in self._masks)

    def is_circuit_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    def is_independent_mask(self, mask: int) -> bool:
        for c in self._masks:
            if c & mask == c:
                return False
        return True

    def is_independent(self, labels: Iterable[str]) -> bool:
        return self.is_independent_mask(self.mask(labels))

    def rank_mask(self, mask: int) -> int:
        indep = 0
        for i in bits(mask):
            if self.is_independent_mask(indep | (1 << i)):
                indep |= 1 << i
        return indep.bit_count()

    def rank_of(self, labels: Iterable[str]) -> int:
        return self.rank_mask(self.mask(labels))

    @cached_property
    def rank(self) -> int:
        return self.rank_mask(self.full)

    def extend_to_base(self, mask: int) -> int:
        """Greedy least-label extension of an independent set to a base."""
        if not self.is_independent_mask(mask):
            raise PreconditionViolated("set is dependent")
        for i in range(len(self.ground)):
            bit = 1 << i
            if not mask & bit and self.is_independent_mask(mask | bit):
                mask |= bit
        return mask

    def closure_mask(self, mask: int) -> int:
        out = mask
        for c in self._masks:
            rest = c & ~mask
            if rest.bit_count() == 1:
                out |= rest
        return out

    @cached_property
    def base_masks(self) -> tuple[int, ...]:
        r = self.rank
        out = []
        for combo in combinations(range(len(self.ground)), r):
            m = sum(1 << i for i in combo)
            if self.is_independent_mask(m):
                out.append(m)
        return tuple(out)

    @property
    def bases(self) -> tuple[frozenset[str], ...]:
        return tuple(self.labels(m) for m in self.base_masks)

    def is_base_mask(self, mask: int) -> bool:
        return mask.bit_count() == self.rank and self.is_independent_mask(mask)

    @cached_property
    def cocircuit_masks(self) -> tuple[int, ...]:
        # cocircuits are complements of hyperplanes; every hyperplane is the
        # closure of an independent set of size rank - 1
        r = self.rank
        if r == 0:
            return ()
        found = set()
        for combo in combinations(range(len(self.ground)), r - 1):
            m = sum(1 << i for i in combo)
            if self.is_independent_mask(m):
                found.add(self.full & ~self.closure_mask(m))
        return tuple(sorted(found, key=mask_key))

    @property
    def cocircuits(self) -> tuple[frozenset[str], ...]:
        return tuple(self.labels(m) for m in self.cocircuit_masks)

    @cached_property
    def loops(self) -> frozenset[str]:
        return frozenset(self.labels(sum(m for m in self._masks if m.bit_count() == 1)))

    @cached_property
    def coloops(self) -> frozenset[str]:
        return frozenset(self.labels(sum(m for m in self.cocircuit_masks if m.bit_count() == 1)))

    @cached_property
    def dual(self) -> Matroid:
        d = Matroid(self.ground, _masks=self.cocircuit_masks)
        d.__dict__["cocircuit_masks"] = self._masks
        d.__dict__["dual"] = self
        d.__dict__["rank"] = len(self.ground) - self.rank
        return d

    def components(self) -> list[frozenset[str]]:
        """Connected components: classes of 'lie on a common circuit'."""
        parent = list(range(len(self.ground)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for c in self._masks:
            idx = bits(c)
            for j in idx[1:]:
                parent[find(j)] = find(idx[0])
        groups: dict[int, int] = {}
        for i in range(len(self.ground)):
            groups[find(i)] = groups.get(find(i), 0) | (1 << i)
        return sorted((self.labels(m) for m in groups.values()), key=lambda s: min(s))

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- validation --------------------------------------------------------

    def _validate(self):
        if 0 in self._mask_set:
            raise AxiomViolation("C1", [frozenset()], "the empty set is a circuit")
        by_size = sorted(self._masks, key=int.bit_count)
        for i, a in enumerate(by_size):
            for b in by_size[i + 1:]:
                if a != b and a & b == a:
                    raise AxiomViolation("C2", [self.labels(a), self.labels(b)],
                                         f"circuit {sorted(self.labels(a))} is a proper "
                                         f"subset of circuit {sorted(self.labels(b))}")
        if len(self.ground) <= _EQUICARDINAL_LIMIT:
            self._check_equicardinal()
        else:
            self._check_elimination()

    def _check_equicardinal(self):
        n = len(self.ground)
        size = 1 << n
        dependent = bytearray(size)
        for m in self._masks:
            dependent[m] = 1
        for m in range(1, size):
            if dependent[m]:
                continue
            x = m
            while x:
                low = x & -x
                if dependent[m ^ low]:
                    dependent[m] = 1
                    break
                x ^= low
        witness: dict[int, int] = {}
        for m in range(size):
            if dependent[m]:
                continue
            if all(dependent[m | (1 << i)] for i in range(n) if not m >> i & 1):
                witness.setdefault(m.bit_count(), m)
                if len(witness) > 1:
                    a, b = sorted(witness.values(), key=int.bit_count)[:2]
                    raise AxiomViolation(
                        "RankConflict", [self.labels(a), self.labels(b)],
                        f"maximal independent sets {sorted(self.labels(a))} and "
                        f"{sorted(self.labels(b))} differ in size")

    def _check_elimination(self):
        for i, a in enumerate(self._masks):
            for b in self._masks[i + 1:]:
                common = a & b
                for e in bits(common):
                    target = (a | b) & ~(1 << e)
                    if self.is_independent_mask(target):
                        raise AxiomViolation("RankConflict", [self.labels(a), self.labels(b)],
                                             "circuit elimination fails")


def matroid_from_circuits(ground: Iterable[str], circuits: Iterable[Iterable[str]]) -> Matroid:
    """Validated constructor: checks (C1), (C2) and equal-size bases."""
    return Matroid(ground, circuits, validate=True)


def dual(M: Matroid) -> Matroid:
    return M.dual


def is_tame(M: Matroid) -> bool:
    """Every circuit-cocircuit intersection is finite; automatic for finite M."""
    return True


# -- minors ------------------------------------------------------------------

@dataclass(frozen=True)
class MinorSpec:
    contract: frozenset[str] = frozenset()
    delete: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "contract", frozenset(self.contract))
        object.__setattr__(self, "delete", frozenset(self.delete))

    def check(self, M: Matroid) -> None:
        if self.contract & self.delete:
            raise InvalidSpec(f"contract and delete overlap: {sorted(self.contract & self.delete)}")
        extra = (self.contract | self.delete) - set(M.ground)
        if extra:
            raise InvalidSpec(f"elements outside the ground set: {sorted(extra)}")

    def remaining(self, M: Matroid) -> tuple[str, ...]:
        return tuple(e for e in M.ground if e not in self.contract and e not in self.delete)

    def dual(self) -> MinorSpec:
        return MinorSpec(self.delete, self.contract)


def minor(M: Matroid, spec: MinorSpec) -> Matroid:
    """M / contract \\ delete."""
    spec.check(M)
    cmask = M.mask(spec.contract)
    dmask = M.mask(spec.delete)
    keep = spec.remaining(M)
    traces = minimal_masks(c & ~cmask for c in M.circuit_masks if not c & dmask)
    # re-index onto the smaller ground set
    old = [M.index[e] for e in keep]
    relabeled = []
    for t in traces:
        m = 0
        for new, i in enumerate(old):
            if t >> i & 1:
                m |= 1 << new
        relabeled.append(m)
    return Matroid(keep, _masks=relabeled)


def delete(M: Matroid, elements: Iterable[str]) -> Matroid:
    return minor(M, MinorSpec(frozenset(), frozenset(elements)))


def contract(M: Matroid, elements: Iterable[str]) -> Matroid:
    return minor(M, MinorSpec(frozenset(elements), frozenset()))


def restrict(M: Matroid, elements: Iterable[str]) -> Matroid:
    keep = set(elements)
    return delete(M, [e for e in M.ground if e not in keep])


def _lift(M: Matroid, family: tuple[int, ...], small: frozenset[str],
          allowed: frozenset[str]) -> list[frozenset[str]]:
    lo = M.mask(small)
    hi = lo | M.mask(allowed)
    return [M.labels(m) for m in family if m & lo == lo and m & ~hi == 0]


def circuit_lifts(M: Matroid, spec: MinorSpec, o: Iterable[str]) -> list[frozenset[str]]:
    """All M-circuits o with o' <= o <= o' + contract, lexicographic order."""
    return _lift(M, M.circuit_masks, frozenset(o), spec.contract)


def cocircuit_lifts(M: Matroid, spec: MinorSpec, b: Iterable[str]) -> list[frozenset[str]]:
    """All M-cocircuits b with b' <= b <= b' + delete, lexicographic order."""
    return _lift(M, M.cocircuit_masks, frozenset(b), spec.delete)


def lift_circuit(M: Matroid, spec: MinorSpec, o: Iterable[str]) -> frozenset[str]:
    lifts = circuit_lifts(M, spec, o)
    if not lifts:
        raise VerificationFailed(f"no lift of {sorted(o)} exists")
    return lifts[0]


def lift_cocircuit(M: Matroid, spec: MinorSpec, b: Iterable[str]) -> frozenset[str]:
    lifts = cocircuit_lifts(M, spec, b)
    if not lifts:
        raise VerificationFailed(f"no lift of {sorted(b)} exists")
    return lifts[0]


# -- fundamental circuits and cocircuits -------------------------------------

def _base_mask(M: Matroid, base: Iterable[str]) -> int:
    try:
        m = M.mask(base)
    except BadParameters as exc:
        raise NotABase(str(exc)) from None
    if not M.is_base_mask(m):
        raise NotABase(f"{sorted(base)} is not a base")
    return m


def _element_bit(M: Matroid, e: str) -> int:
    if e not in M.index:
        raise PreconditionViolated(f"{e!r} is not in the ground set")
    return 1 << M.index[e]


def fundamental_circuit_mask(M: Matroid, base: int, bit: int) -> int:
    for c in M.circuit_masks:
        if c & bit and c & ~(base | bit) == 0:
            return c
    raise VerificationFailed("no fundamental circuit found")


def fundamental_cocircuit_mask(M: Matroid, base: int, bit: int) -> int:
    allowed = (M.full & ~base) | bit
    for b in M.cocircuit_masks:
        if b & bit and b & ~allowed == 0:
            return b
    raise VerificationFailed("no fundamental cocircuit found")


def fundamental_circuit(M: Matroid, base: Iterable[str], e: str) -> frozenset[str]:
    """The unique circuit inside base + e; it contains e."""
    s = _base_mask(M, base)
    bit = _element_bit(M, e)
    if s & bit:
        raise ElementInBase(f"{e!r} lies in the base")
    return M.labels(fundamental_circuit_mask(M, s, bit))


def fundamental_cocircuit(M: Matroid, base: Iterable[str], f: str) -> frozenset[str]:
    """The unique cocircuit inside (E - base) + f; it contains f."""
    s = _base_mask(M, base)
    bit = _element_bit(M, f)
    if not s & bit:
        raise ElementNotInBase(f"{f!r} does not lie in the base")
    return M.labels(fundamental_cocircuit_mask(M, s, bit))


def cocircuit_through_pair_mask(M: Matroid, o: int, e: int, f: int) -> int:
    s = M.extend_to_base(o & ~e)
    b = fundamental_cocircuit_mask(M, s, f)
    if o & b != e | f:
        raise VerificationFailed("cocircuit does not meet the circuit in the pair")
    return b


def cocircuit_through_pair(M: Matroid, o: Iterable[str], e: str, f: str) -> frozenset[str]:
    """A cocircuit b meeting the circuit o in exactly {e, f}.

    Extends o - e greedily to a base and returns the fundamental cocircuit
    of f with respect to it.
    """
    om = M.mask(o)
    if not M.is_circuit_mask(om):
        raise PreconditionViolated(f"{sorted(o)} is not a circuit")
    if e == f or e not in o or f not in o:
        raise PreconditionViolated("need two distinct elements of the circuit")
    return M.labels(cocircuit_through_pair_mask(M, om, 1 << M.index[e], 1 << M.index[f]))


def circuit_through_pair(M: Matroid, b: Iterable[str], e: str, f: str) -> frozenset[str]:
    """A circuit meeting the cocircuit b in exactly {e, f}."""
    return cocircuit_through_pair(M.dual, b, e, f)


# -- scrawls -----------------------------------------------------------------

def scrawl_interior_mask(M: Matroid, mask: int) -> int:
    """Largest scrawl inside mask: the union of all circuits it contains."""
    out = 0
    for c in M.circuit_masks:
        if c & mask == c:
            out |= c
    return out


def meets_no_cocircuit_once(M: Matroid, mask: int) -> bool:
    return all((mask & b).bit_count() != 1 for b in M.cocircuit_masks)


def is_scrawl(M: Matroid, w: Iterable[str]) -> bool:
    """True iff w is a union of circuits.

    Decided by the cocircuit criterion (w never meets a cocircuit exactly
    once) and cross-checked against the union-of-circuits definition.
    """
    m = M.mask(w)
    by_cocircuits = meets_no_cocircuit_once(M, m)
    by_union = scrawl_interior_mask(M, m) == m
    if by_cocircuits != by_union:
        raise VerificationFailed(f"scrawl criteria disagree on {sorted(w)}")
    return by_cocircuits


def scrawl_masks(M: Matroid) -> list[int]:
    """All scrawls, generated as the union-closure of the circuits."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            for c in M.circuit_masks:
                u = w | c
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda m: (m.bit_count(), mask_key(m)))


def interior_table(M: Matroid) -> list[int]:
    """interior[m] = union of circuits inside m, for every subset m."""
    size = 1 << len(M.ground)
    table = [0] * size
    for m in range(1, size):
        best = m if M.is_circuit_mask(m) else 0
        x = m
        while x:
            low = x & -x
            best |= table[m ^ low]
            x ^= low
        table[m] = best
    return table


@dataclass
class ScrawlReport:
    ok: bool
    scrawl_count: int
    failures: list[str]

    def __bool__(self):
        return self.ok


def check_scrawl_axioms(M: Matroid, budget: int = SCRAWL_BUDGET) -> ScrawlReport:
    """Exhaustively check the scrawl axioms on the scrawl family of M.

    Covers union closure, scrawl elimination for single-element X, that the
    minimal nonempty scrawls are the circuits, and that the cocircuit
    criterion matches membership for every subset.
    """
    n = len(M.ground)
    if (1 << n) > budget:
        raise TooLarge(f"2^{n} subsets exceed the scrawl budget of {budget}")
    scrawls = scrawl_masks(M)
    family = set(scrawls)
    table = interior_table(M)
    failures: list[str] = []
    show = M.sorted_labels

    for m in range(1 << n):
        if (m in family) != meets_no_cocircuit_once(M, m) or (m in family) != (table[m] == m):
            failures.append(f"membership criteria disagree on {show(m)}")

    for i, a in enumerate(scrawls):
        for b in scrawls[i:]:
            if a | b not in family:
                failures.append(f"S1: {show(a)} | {show(b)} is not a scrawl")

    for w in scrawls:
        for wx in scrawls:
            common = w & wx
            zs = w & ~wx
            if not common or not zs:
                continue
            for x in bits(common):
                inner = table[(w | wx) & ~(1 << x)]
                if zs & ~inner:
                    failures.append(f"S2: w={show(w)} w_x={show(wx)} x={M.ground[x]}")

    minimal = minimal_masks(s for s in scrawls if s)
    if sorted(minimal) != sorted(M.circuit_masks):
        failures.append("minimal nonempty scrawls differ from the circuits")
    return ScrawlReport(not failures, len(scrawls), failures)


def minor_scrawls_match(M: Matroid, spec: MinorSpec) -> bool:
    """w' is a scrawl of M/C\\D iff some scrawl w of M has w' <= w <= w' + C."""
    N = minor(M, spec)
    cmask = M.mask(spec.contract)
    dmask = M.mask(spec.delete)
    old = [M.index[e] for e in N.ground]
    images = set()
    for w in scrawl_masks(M):
        if w & dmask:
            continue
        t = w & ~cmask
        m = 0
        for new, i in enumerate(old):
            if t >> i & 1:
                m |= 1 << new
        images.add(m)
    return images == set(scrawl_masks(N))
