"""Paintings: unit-valued functions on circuits and cocircuits.

A painting over a ring (a field k with units k*, or a partial field (R, S))
assigns each circuit o a map ``c_o: o -> units`` and each cocircuit b a map
``d_b: b -> units`` such that for every circuit o and cocircuit b::

    sum(c_o(e) * d_b(e) for e in o & b) == 0

This module verifies that condition, builds paintings from representations
and back, restricts paintings to minors, searches for paintings over any
supported ring, and certifies equivalence of GF(3) paintings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .errors import (
    DomainMismatch,
    NotConnected,
    PartialFieldTag,
    PreconditionViolated,
    TooLarge,
    TraceInvariantViolated,
    UnverifiedPainting,
    VerificationFailed,
    WitnessVerificationFailed,
)
from .fields import GF3, REGULAR, Automorphism, Ring
from .linrep import Representation, circuit_dependence, matroid_from_representation
from .matroid import (
    Matroid,
    MinorSpec,
    bits,
    cocircuit_through_pair_mask,
    cocircuit_lifts,
    circuit_lifts,
    mask_key,
    minor,
)

PAINTING_NODE_BUDGET = 500_000
# open value combinations enumerated per sum during propagation
COMBINATION_LIMIT = 1296

Values = Mapping[str, object]


@dataclass(frozen=True)
class Painting:
    ring: Ring
    circuit_values: Mapping[frozenset, Values] = field(default_factory=dict)
    cocircuit_values: Mapping[frozenset, Values] = field(default_factory=dict)

    def c(self, o: Iterable[str], e: str):
        return self.circuit_values[frozenset(o)][e]

    def d(self, b: Iterable[str], e: str):
        return self.cocircuit_values[frozenset(b)][e]

    def map_values(self, ring: Ring, fn) -> Painting:
        return Painting(
            ring,
            {o: {e: fn(v) for e, v in vals.items()} for o, vals in self.circuit_values.items()},
            {b: {e: fn(v) for e, v in vals.items()} for b, vals in self.cocircuit_values.items()},
        )


Signing = Painting


@dataclass
class PaintingReport:
    failures: list[tuple[tuple[str, ...], tuple[str, ...], object]]
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def _check_domain(M: Matroid, p: Painting) -> None:
    if set(p.circuit_values) != set(M.circuits):
        raise DomainMismatch("painting circuits do not match the matroid's circuits")
    if set(p.cocircuit_values) != set(M.cocircuits):
        raise DomainMismatch("painting cocircuits do not match the matroid's cocircuits")
    for family in (p.circuit_values, p.cocircuit_values):
        for s, vals in family.items():
            if set(vals) != set(s):
                raise DomainMismatch(f"values on {sorted(s)} have domain {sorted(vals)}")
            for e, v in vals.items():
                if not p.ring.is_unit(v):
                    raise DomainMismatch(f"value {p.ring.render(v)} at {e} of {sorted(s)} is not a unit")


def verify_painting(M: Matroid, p: Painting) -> PaintingReport:
    """Evaluate the painting sum exactly on every circuit-cocircuit pair."""
    _check_domain(M, p)
    return painting_sums(p)


def painting_sums(p: Painting) -> PaintingReport:
    """Evaluate every circuit-cocircuit sum of p without consulting a matroid."""
    ring = p.ring
    failures = []
    checked = 0
    for o in sorted(p.circuit_values, key=sorted):
        co = p.circuit_values[o]
        for b in sorted(p.cocircuit_values, key=sorted):
            common = o & b
            if not common:
                continue
            checked += 1
            db = p.cocircuit_values[b]
            total = ring.zero
            for e in common:
                total = ring.add(total, ring.mul(co[e], db[e]))
            if total != ring.zero:
                failures.append((tuple(sorted(o)), tuple(sorted(b)), total))
    return PaintingReport(failures, checked)


def is_painting(M: Matroid, p: Painting) -> bool:
    try:
        return verify_painting(M, p).ok
    except DomainMismatch:
        return False


def constant_painting(M: Matroid, ring: Ring, value=None) -> Painting:
    v = ring.one if value is None else value
    return Painting(ring,
                    {o: {e: v for e in o} for o in M.circuits},
                    {b: {e: v for e in b} for b in M.cocircuits})


def paint_from_representation(rep: Representation, M: Matroid | None = None) -> Painting:
    """Painting of the column matroid of rep.

    c_o is the circuit's dependence scaled to 1 at its least element. For a
    cocircuit b with least element e_b, d_b(e_b) = 1 and, for every other
    e in b, d_b(e) = -c_{o(e)}(e_b) / c_{o(e)}(e) where o(e) is a circuit
    meeting b exactly in {e_b, e}.
    """
    ring = rep.ring
    M = M or matroid_from_representation(rep)
    cvals: dict[frozenset, dict] = {}
    for o in M.circuits:
        cvals[o] = dict(circuit_dependence(rep, o).coefficients)
    dvals: dict[frozenset, dict] = {}
    for bm in M.cocircuit_masks:
        idx = bits(bm)
        eb_bit = 1 << idx[0]
        eb = M.ground[idx[0]]
        vals = {eb: ring.one}
        for i in idx[1:]:
            # a circuit meeting b in {e_b, e}, found as a cocircuit of the dual
            om = cocircuit_through_pair_mask(M.dual, bm, eb_bit, 1 << i)
            co = cvals[M.labels(om)]
            e = M.ground[i]
            vals[e] = ring.neg(ring.div(co[eb], co[e]))
        dvals[M.labels(bm)] = vals
    p = Painting(ring, cvals, dvals)
    report = verify_painting(M, p)
    if not report.ok:
        raise VerificationFailed(f"constructed painting fails on {report.failures[:3]}")
    return p


def representation_from_painting(M: Matroid, p: Painting, *, check: bool = True) -> Representation:
    """Rows are the cocircuits; f_e(b) = d_b(e) for e in b, else 0."""
    if not p.ring.is_field:
        raise PartialFieldTag(f"{p.ring!r} is not a field")
    if check and not verify_painting(M, p).ok:
        raise UnverifiedPainting("painting does not satisfy the painting condition")
    ring = p.ring
    cocircuits = M.cocircuits
    cols = {}
    for e in M.ground:
        cols[e] = tuple(p.cocircuit_values[b][e] if e in b else ring.zero for b in cocircuits)
    rows = tuple(f"b{i}" for i in range(len(cocircuits)))
    rep = Representation(ring, rows, cols)
    if check and matroid_from_representation(rep) != M:
        raise VerificationFailed("painting does not rebuild the matroid")
    return rep


# -- minors ------------------------------------------------------------------

def induce_painting(M: Matroid, p: Painting, spec: MinorSpec) -> Painting:
    """Restrict p to M/C\\D using the lexicographically least lifts."""
    N = minor(M, spec)
    cvals = {}
    for o2 in N.circuits:
        o = circuit_lifts(M, spec, o2)[0]
        cvals[o2] = {e: p.circuit_values[o][e] for e in o2}
    dvals = {}
    for b2 in N.cocircuits:
        b = cocircuit_lifts(M, spec, b2)[0]
        dvals[b2] = {e: p.cocircuit_values[b][e] for e in b2}
    q = Painting(p.ring, cvals, dvals)
    report = verify_painting(N, q)
    if not report.ok:
        raise VerificationFailed(f"induced painting fails on {report.failures[:3]}")
    return q


def scalar_between(ring: Ring, f: Values, g: Values):
    """The unit lam with f = lam * g on g's domain, or None if there is none."""
    keys = sorted(g)
    if not keys:
        return ring.one
    lam = ring.div(f[keys[0]], g[keys[0]])
    if not ring.is_unit(lam):
        return None
    for e in keys[1:]:
        if f[e] != ring.mul(lam, g[e]):
            return None
    return lam


@dataclass
class FiniteMinorContext:
    circuits: tuple[frozenset, ...]
    cocircuits: tuple[frozenset, ...]
    focus: frozenset
    augmented_focus: frozenset
    extended_circuits: tuple[frozenset, ...]
    extended_cocircuits: tuple[frozenset, ...]
    extended_focus: frozenset
    spec: MinorSpec
    minor: Matroid
    circuit_anchor: dict
    cocircuit_anchor: dict
    circuit_traces: dict
    cocircuit_traces: dict

    def trace_invariants_hold(self) -> bool:
        F = self.augmented_focus
        return (all(self.circuit_traces[o] & F == o & F for o in self.circuits)
                and all(self.cocircuit_traces[b] & F == b & F for b in self.cocircuits)
                and all(self.circuit_traces[o] <= o for o in self.circuits)
                and all(self.cocircuit_traces[b] <= b for b in self.cocircuits))


def extract_finite_minor(M: Matroid, O: Iterable[Iterable[str]],
                         B: Iterable[Iterable[str]]) -> FiniteMinorContext:
    """Build a minor on which the given circuits and cocircuits keep their traces.

    Follows the finite-minor construction: anchors e_o, e_b are least
    elements of the traces on the focus set F; cocircuits b_{o,e} and
    circuits o_{b,e} meeting the anchors in pairs are added; the minor
    contracts union(O') - F' and deletes the rest.

    Two degenerate cases are handled explicitly: a circuit or cocircuit
    with empty trace gets its least element added to F together with a pair
    witness through it, and loops in O and coloops in B are kept in the
    minor rather than contracted or deleted.
    """
    O = sorted({frozenset(o) for o in O}, key=lambda s: mask_key(M.mask(s)))
    B = sorted({frozenset(b) for b in B}, key=lambda s: mask_key(M.mask(s)))
    if not O or not B:
        raise PreconditionViolated("need at least one circuit and one cocircuit")
    om = [M.mask(o) for o in O]
    bm = [M.mask(b) for b in B]
    for o, m in zip(O, om):
        if not M.is_circuit_mask(m):
            raise PreconditionViolated(f"{sorted(o)} is not a circuit")
    cocircuit_set = set(M.cocircuit_masks)
    for b, m in zip(B, bm):
        if m not in cocircuit_set:
            raise PreconditionViolated(f"{sorted(b)} is not a cocircuit")

    union_o = 0
    for m in om:
        union_o |= m
    union_b = 0
    for m in bm:
        union_b |= m
    focus = union_o & union_b
    F = focus
    extra_b: list[int] = []
    extra_o: list[int] = []
    dual = M.dual
    for m in om:
        if m & F == 0 and m.bit_count() > 1:
            e, f = bits(m)[:2]
            F |= 1 << e
            extra_b.append(cocircuit_through_pair_mask(M, m, 1 << f, 1 << e))
    for m in bm:
        if m & F == 0 and m.bit_count() > 1:
            e, f = bits(m)[:2]
            F |= 1 << e
            extra_o.append(cocircuit_through_pair_mask(dual, m, 1 << f, 1 << e))

    keep = 0  # loops of O and coloops of B stay in the minor
    anchor_o: dict[int, int] = {}
    B2 = set(bm) | set(extra_b)
    for m in om:
        if m.bit_count() == 1:
            keep |= m
            anchor_o[m] = m
            continue
        idx = bits(m & F)
        eo = 1 << idx[0]
        anchor_o[m] = eo
        for i in idx[1:]:
            B2.add(cocircuit_through_pair_mask(M, m, eo, 1 << i))
    anchor_b: dict[int, int] = {}
    O2 = set(om) | set(extra_o)
    for m in bm:
        if m.bit_count() == 1:
            keep |= m
            anchor_b[m] = m
            continue
        idx = bits(m & F)
        eb = 1 << idx[0]
        anchor_b[m] = eb
        for i in idx[1:]:
            O2.add(cocircuit_through_pair_mask(dual, m, eb, 1 << i))

    union_o2 = 0
    for m in O2:
        union_o2 |= m
    union_b2 = 0
    for m in B2:
        union_b2 |= m
    F2 = (union_o2 & union_b2) | keep
    C = union_o2 & ~F2
    D = M.full & ~(union_o2 | F2)
    spec = MinorSpec(M.labels(C), M.labels(D))
    N = minor(M, spec)

    ctraces = {}
    for o, m in zip(O, om):
        inside = N.mask(M.labels(m & F2))
        anchor = N.mask(M.labels(anchor_o[m]))
        cand = [c for c in N.circuit_masks if c & anchor and c & ~inside == 0]
        if not cand:
            raise TraceInvariantViolated(f"no trace circuit for {sorted(o)}")
        ctraces[o] = N.labels(cand[0])
    btraces = {}
    for b, m in zip(B, bm):
        inside = N.mask(M.labels(m & F2))
        anchor = N.mask(M.labels(anchor_b[m]))
        cand = [c for c in N.cocircuit_masks if c & anchor and c & ~inside == 0]
        if not cand:
            raise TraceInvariantViolated(f"no trace cocircuit for {sorted(b)}")
        btraces[b] = N.labels(cand[0])

    ctx = FiniteMinorContext(
        circuits=tuple(O),
        cocircuits=tuple(B),
        focus=M.labels(focus),
        augmented_focus=M.labels(F),
        extended_circuits=tuple(M.labels(m) for m in sorted(O2, key=mask_key)),
        extended_cocircuits=tuple(M.labels(m) for m in sorted(B2, key=mask_key)),
        extended_focus=M.labels(F2),
        spec=spec,
        minor=N,
        circuit_anchor={o: M.ground[bits(anchor_o[m])[0]] for o, m in zip(O, om)},
        cocircuit_anchor={b: M.ground[bits(anchor_b[m])[0]] for b, m in zip(B, bm)},
        circuit_traces=ctraces,
        cocircuit_traces=btraces,
    )
    if not ctx.trace_invariants_hold():
        raise TraceInvariantViolated("trace invariants fail")
    return ctx


# -- painting search ---------------------------------------------------------

def find_painting(M: Matroid, ring: Ring, *, budget: int = PAINTING_NODE_BUDGET) -> Painting | None:
    """Exhaustive search for a painting of M with values in ``ring.units``.

    Each c_o and d_b is normalized to 1 at its least element (scaling a whole
    c_o or d_b by a unit preserves the painting condition). Every other value
    keeps a domain of still-possible units. Each circuit-cocircuit sum with
    few enough open combinations is enumerated to drop unsupported values
    (arc consistency), and the search branches on a smallest open domain.
    """
    zero, one = ring.zero, ring.one
    units = tuple(ring.units)
    add, mul = ring.add, ring.mul
    circ = M.circuit_masks
    cocirc = M.cocircuit_masks

    var_of: dict[tuple[int, int, int], int] = {}
    for k, m in enumerate(circ):
        for i in bits(m):
            var_of[(0, k, i)] = len(var_of)
    for k, m in enumerate(cocirc):
        for i in bits(m):
            var_of[(1, k, i)] = len(var_of)
    nvars = len(var_of)

    constraints: list[list[tuple[int, int]]] = []
    touches: list[list[int]] = [[] for _ in range(nvars)]
    for ko, om in enumerate(circ):
        for kb, bm in enumerate(cocirc):
            common = om & bm
            if not common:
                continue
            terms = [(var_of[(0, ko, i)], var_of[(1, kb, i)]) for i in bits(common)]
            for cv, dv in terms:
                touches[cv].append(len(constraints))
                touches[dv].append(len(constraints))
            constraints.append(terms)

    dom: list[tuple] = [units] * nvars
    for k, m in enumerate(circ):
        dom[var_of[(0, k, bits(m)[0])]] = (one,)
    for k, m in enumerate(cocirc):
        dom[var_of[(1, k, bits(m)[0])]] = (one,)
    trail: list[tuple[int, tuple]] = []

    def restrict(v, values):
        trail.append((v, dom[v]))
        dom[v] = values

    def undo(mark):
        while len(trail) > mark:
            v, old = trail.pop()
            dom[v] = old

    def revise(cid) -> list[int] | None:
        fixed = zero
        open_vars = []
        for cv, dv in constraints[cid]:
            if len(dom[cv]) == 1 and len(dom[dv]) == 1:
                fixed = add(fixed, mul(dom[cv][0], dom[dv][0]))
            else:
                open_vars += [cv, dv]
        if not open_vars:
            return None if fixed != zero else []
        size = 1
        for v in open_vars:
            size *= len(dom[v])
        if size > COMBINATION_LIMIT:
            return []
        support = [set() for _ in open_vars]
        pairs = len(open_vars) // 2
        for combo in product(*(dom[v] for v in open_vars)):
            total = fixed
            for j in range(pairs):
                total = add(total, mul(combo[2 * j], combo[2 * j + 1]))
            if total == zero:
                for j, x in enumerate(combo):
                    support[j].add(x)
        changed = []
        for v, sup in zip(open_vars, support):
            if len(sup) < len(dom[v]):
                if not sup:
                    return None
                restrict(v, tuple(x for x in dom[v] if x in sup))
                changed.append(v)
        return changed

    def propagate(queue: list[int]) -> bool:
        pending = set(queue)
        while queue:
            cid = queue.pop()
            pending.discard(cid)
            changed = revise(cid)
            if changed is None:
                return False
            for v in changed:
                for other in touches[v]:
                    if other not in pending:
                        pending.add(other)
                        queue.append(other)
        return True

    nodes = 0

    def search() -> bool:
        nonlocal nodes
        best = None
        for v in range(nvars):
            if len(dom[v]) > 1 and (best is None or len(dom[v]) < len(dom[best])):
                best = v
                if len(dom[v]) == 2:
                    break
        if best is None:
            return True
        for x in dom[best]:
            nodes += 1
            if nodes > budget:
                raise TooLarge(f"painting search exceeded {budget} nodes")
            mark = len(trail)
            restrict(best, (x,))
            if propagate(list(touches[best])) and search():
                return True
            undo(mark)
        return False

    if not propagate(list(range(len(constraints)))) or not search():
        return None
    cvals = {M.labels(m): {M.ground[i]: dom[var_of[(0, k, i)]][0] for i in bits(m)}
             for k, m in enumerate(circ)}
    dvals = {M.labels(m): {M.ground[i]: dom[var_of[(1, k, i)]][0] for i in bits(m)}
             for k, m in enumerate(cocirc)}
    p = Painting(ring, cvals, dvals)
    if not verify_painting(M, p).ok:
        raise VerificationFailed("painting search returned an invalid painting")
    return p


def find_signing(M: Matroid, *, budget: int = PAINTING_NODE_BUDGET) -> Painting | None:
    """A {1, -1} painting with sums over the integers, or None."""
    return find_painting(M, REGULAR, budget=budget)


def signing_to_field(s: Painting, ring: Ring) -> Painting:
    """Map a signing's +1/-1 into a ring; the result is a painting there."""
    minus = ring.neg(ring.one)
    return s.map_values(ring, lambda v: ring.one if v == 1 else minus)


# -- equivalence -------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceWitness:
    element_scalars: Mapping[str, object]
    circuit_scalars: Mapping[frozenset, object]
    cocircuit_scalars: Mapping[frozenset, object]
    phi: Automorphism


def check_equivalence(M: Matroid, p1: Painting, p2: Painting, w: EquivalenceWitness) -> bool:
    """p2.c_o(e) = phi(x(o) x(e) p1.c_o(e)) and p2.d_b(e) = phi(x(b) p1.d_b(e) / x(e))."""
    ring = p1.ring
    if p2.ring is not ring or w.phi.ring is not ring:
        return False
    try:
        for o in M.circuits:
            xo = w.circuit_scalars[o]
            for e in o:
                want = w.phi(ring.mul(ring.mul(xo, w.element_scalars[e]), p1.circuit_values[o][e]))
                if p2.circuit_values[o][e] != want:
                    return False
        for b in M.cocircuits:
            xb = w.cocircuit_scalars[b]
            for e in b:
                want = w.phi(ring.div(ring.mul(xb, p1.cocircuit_values[b][e]), w.element_scalars[e]))
                if p2.cocircuit_values[b][e] != want:
                    return False
    except (KeyError, ZeroDivisionError):
        return False
    return True


def apply_equivalence(M: Matroid, p: Painting, w: EquivalenceWitness) -> Painting:
    """The painting that w certifies as equivalent to p."""
    ring = p.ring
    cvals = {o: {e: w.phi(ring.mul(ring.mul(w.circuit_scalars[o], w.element_scalars[e]), v))
                 for e, v in vals.items()}
             for o, vals in p.circuit_values.items()}
    dvals = {b: {e: w.phi(ring.div(ring.mul(w.cocircuit_scalars[b], v), w.element_scalars[e]))
                 for e, v in vals.items()}
             for b, vals in p.cocircuit_values.items()}
    return Painting(ring, cvals, dvals)


def equivalence_witness_f3(M: Matroid, p1: Painting, p2: Painting, *,
                           per_component: bool = True) -> EquivalenceWitness:
    """Scalars certifying that two GF(3) paintings of M are equivalent.

    Per connected component: g1 is its least element and o(g) the least
    circuit through g1 and g; then::

        x(g) = p2.c_o(g) p1.c_o(g1) / (p2.c_o(g1) p1.c_o(g))    with o = o(g)
        x(o) = p2.c_o(e) / (x(e) p1.c_o(e))                      e least in o
        x(b) = x(e) p2.d_b(e) / p1.d_b(e)                        e least in b

    and phi is the identity.
    """
    ring = GF3
    if p1.ring is not ring or p2.ring is not ring:
        raise PreconditionViolated("both paintings must be over GF(3)")
    for p in (p1, p2):
        if not verify_painting(M, p).ok:
            raise PreconditionViolated("both paintings must be verified")
    comps = M.components()
    if len(comps) > 1 and not per_component:
        raise NotConnected(f"matroid has {len(comps)} components")

    c1, c2 = p1.circuit_values, p2.circuit_values
    x: dict[str, int] = {}
    for comp in comps:
        g1 = min(comp)
        x[g1] = ring.one
        through = [o for o in M.circuits if g1 in o]
        for g in sorted(comp - {g1}):
            o = next(o for o in through if g in o)
            num = ring.mul(c2[o][g], c1[o][g1])
            den = ring.mul(c2[o][g1], c1[o][g])
            x[g] = ring.div(num, den)
    xo = {}
    for o in M.circuits:
        e = min(o)
        xo[o] = ring.div(c2[o][e], ring.mul(x[e], c1[o][e]))
    xb = {}
    for b in M.cocircuits:
        e = min(b)
        xb[b] = ring.div(ring.mul(x[e], p2.cocircuit_values[b][e]), p1.cocircuit_values[b][e])
    w = EquivalenceWitness(x, xo, xb, Automorphism(ring, 0))
    if not check_equivalence(M, p1, p2, w):
        raise WitnessVerificationFailed("computed scalars do not certify equivalence")
    return w
