"""Linear representations over finite fields.

A representation assigns each ground element a column ``f_e`` indexed by a
finite row set. For finitely many columns a thin dependence is an ordinary
linear dependence, so the thin sums matroid of a representation is just its
column matroid; that is what :func:`matroid_from_representation` computes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .errors import InvalidDependence, NotACircuit, PreconditionViolated, TooLarge, VerificationFailed
from .fields import Ring
from .matroid import Matroid, bits, fundamental_circuit_mask

ORACLE_MAX_ELEMENTS = 8
ORACLE_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class Representation:
    ring: Ring
    rows: tuple[str, ...]
    columns: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        if not self.ring.is_field:
            raise PreconditionViolated(f"{self.ring!r} is not a field")
        for e, col in self.columns.items():
            if len(col) != len(self.rows):
                raise PreconditionViolated(f"column {e!r} has {len(col)} entries, expected {len(self.rows)}")

    @classmethod
    def from_rows(cls, ring: Ring, labels: Sequence[str], matrix: Sequence[Sequence],
                  row_labels: Sequence[str] | None = None) -> Representation:
        matrix = [[ring.coerce(v) for v in row] for row in matrix]
        if row_labels is None:
            row_labels = [f"r{i}" for i in range(len(matrix))]
        cols = {e: tuple(row[j] for row in matrix) for j, e in enumerate(labels)}
        return cls(ring, tuple(row_labels), cols)

    @property
    def ground(self) -> tuple[str, ...]:
        return tuple(sorted(self.columns))

    def matrix(self) -> list[list]:
        """Row-major matrix with columns in ground order."""
        g = self.ground
        return [[self.columns[e][i] for e in g] for i in range(len(self.rows))]

    def column_vectors(self, labels: Iterable[str]) -> list[tuple]:
        return [self.columns[e] for e in labels]


@dataclass(frozen=True)
class Dependence:
    ring: Ring
    coefficients: Mapping[str, object]

    @property
    def support(self) -> frozenset[str]:
        z = self.ring.zero
        return frozenset(e for e, v in self.coefficients.items() if v != z)

    def coefficient(self, e: str):
        return self.coefficients.get(e, self.ring.zero)


def vector_rank(ring: Ring, vectors: Sequence[Sequence]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    zero = ring.zero
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != zero), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ring.inv(rows[rank][col])
        prow = [ring.mul(inv, x) for x in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f != zero:
                rows[i] = [ring.sub(a, ring.mul(f, b)) for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def nullspace(ring: Ring, vectors: Sequence[Sequence]) -> list[list]:
    """Basis of {lam : sum_j lam_j * vectors[j] = 0}."""
    k = len(vectors)
    m = len(vectors[0]) if vectors else 0
    zero, one = ring.zero, ring.one
    a = [[vectors[j][i] for j in range(k)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, m) if a[i][col] != zero), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = ring.inv(a[r][col])
        a[r] = [ring.mul(inv, x) for x in a[r]]
        for i in range(m):
            f = a[i][col]
            if i != r and f != zero:
                a[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(k) if c not in pivots):
        vec = [zero] * k
        vec[free] = one
        for row, pc in enumerate(pivots):
            vec[pc] = ring.neg(a[row][free])
        basis.append(vec)
    return basis


def matroid_from_representation(rep: Representation) -> Matroid:
    """Column matroid: circuits are minimal supports of nonzero dependences."""
    g = rep.ground
    vecs = [rep.columns[e] for e in g]
    r = vector_rank(rep.ring, vecs)
    circuits: list[int] = []
    for size in range(1, min(r + 1, len(g)) + 1):
        for combo in combinations(range(len(g)), size):
            m = sum(1 << i for i in combo)
            if any(c & m == c for c in circuits):
                continue
            if vector_rank(rep.ring, [vecs[i] for i in combo]) < size:
                circuits.append(m)
    return Matroid(g, _masks=circuits)


def is_dependence(rep: Representation, dep: Dependence) -> bool:
    ring = rep.ring
    for i in range(len(rep.rows)):
        total = ring.zero
        for e, lam in dep.coefficients.items():
            total = ring.add(total, ring.mul(lam, rep.columns[e][i]))
        if total != ring.zero:
            return False
    return True


def circuit_dependence(rep: Representation, o: Iterable[str]) -> Dependence:
    """The dependence supported on circuit o, scaled to 1 at its least element."""
    ring = rep.ring
    labels = sorted(o)
    if not labels or any(e not in rep.columns for e in labels):
        raise NotACircuit(f"{labels} is not a circuit")
    basis = nullspace(ring, rep.column_vectors(labels))
    if len(basis) != 1 or any(v == ring.zero for v in basis[0]):
        raise NotACircuit(f"{labels} is not a circuit")
    vec = basis[0]
    scale = ring.inv(vec[0])
    return Dependence(ring, {e: ring.mul(scale, v) for e, v in zip(labels, vec)})


def combine(ring: Ring, terms: Iterable[tuple[object, Dependence]]) -> Dependence:
    out: dict[str, object] = {}
    for scalar, dep in terms:
        for e, v in dep.coefficients.items():
            out[e] = ring.add(out.get(e, ring.zero), ring.mul(scalar, v))
    return Dependence(ring, {e: v for e, v in out.items() if v != ring.zero})


def peel_dependence(rep: Representation, dep: Dependence,
                    M: Matroid | None = None) -> list[frozenset[str]]:
    """Strip circuit dependences off dep until nothing is left.

    Each step picks the least circuit inside the current support and its
    least element x, and subtracts the matching multiple of that circuit's
    dependence so that x leaves the support. Returns the circuits used; their
    union is the original support.
    """
    if not is_dependence(rep, dep):
        raise InvalidDependence("coefficients do not give a dependence")
    ring = rep.ring
    M = M or matroid_from_representation(rep)
    used = []
    current = Dependence(ring, dict(dep.coefficients))
    for _ in range(len(current.support) + 1):
        supp = M.mask(current.support)
        if not supp:
            return used
        o = next((c for c in M.circuit_masks if c & supp == c), None)
        if o is None:
            raise VerificationFailed("nonzero dependence whose support contains no circuit")
        circ = M.labels(o)
        co = circuit_dependence(rep, circ)
        x = M.ground[bits(o)[0]]
        factor = ring.neg(ring.div(current.coefficient(x), co.coefficient(x)))
        current = combine(ring, [(ring.one, current), (factor, co)])
        used.append(circ)
    raise VerificationFailed("peeling did not terminate")


def support_is_scrawl_check(rep: Representation, dep: Dependence) -> bool:
    from .matroid import is_scrawl

    if not is_dependence(rep, dep):
        raise InvalidDependence("coefficients do not give a dependence")
    return is_scrawl(matroid_from_representation(rep), dep.support)


def rescale_columns(rep: Representation, scalars: Mapping[str, object]) -> Representation:
    ring = rep.ring
    cols = {e: tuple(ring.mul(scalars.get(e, ring.one), v) for v in col)
            for e, col in rep.columns.items()}
    return Representation(ring, rep.rows, cols)


def transform_rows(rep: Representation, matrix: Sequence[Sequence]) -> Representation:
    """Left-multiply every column by a square matrix (invertibility is the caller's job)."""
    ring = rep.ring
    cols = {}
    for e, col in rep.columns.items():
        new = []
        for row in matrix:
            total = ring.zero
            for a, v in zip(row, col):
                total = ring.add(total, ring.mul(a, v))
            new.append(total)
        cols[e] = tuple(new)
    return Representation(ring, tuple(f"t{i}" for i in range(len(matrix))), cols)


def brute_force_representable(M: Matroid, ring: Ring, *, max_elements: int = ORACLE_MAX_ELEMENTS,
                              budget: int = ORACLE_NODE_BUDGET) -> Representation | None:
    """Exhaustive search for a representation of M over ``ring``.

    The least base is fixed to the identity block. Every other column is
    supported exactly on the base part of its fundamental circuit (forced in
    standard form) and scaled to have first nonzero entry 1. Columns are
    enumerated in lexicographic order, so the witness returned is the least
    one in that order.
    """
    if not ring.is_field:
        raise PreconditionViolated(f"{ring!r} is not a field")
    n = len(M.ground)
    if n > max_elements:
        raise TooLarge(f"{n} elements exceed the oracle limit of {max_elements}")
    base = M.extend_to_base(0)
    base_idx = bits(base)
    r = len(base_idx)
    row_of = {i: k for k, i in enumerate(base_idx)}
    zero, one = ring.zero, ring.one

    columns: dict[int, tuple] = {}
    for i in base_idx:
        columns[i] = tuple(one if k == row_of[i] else zero for k in range(r))

    others = [i for i in range(n) if not base >> i & 1]
    choices: list[list[tuple]] = []
    for i in others:
        supp = [row_of[j] for j in bits(fundamental_circuit_mask(M, base, 1 << i)) if j != i]
        opts = []
        for tail in product(ring.units, repeat=max(len(supp) - 1, 0)):
            vals = (one,) + tail if supp else ()
            col = [zero] * r
            for k, v in zip(supp, vals):
                col[k] = v
            opts.append(tuple(col))
        choices.append(opts)

    nodes = 0

    def consistent(i: int) -> bool:
        placed = [j for j in columns if j != i]
        for size in range(0, r):
            for combo in combinations(placed, size):
                m = (1 << i) | sum(1 << j for j in combo)
                want = M.is_independent_mask(m)
                got = vector_rank(ring, [columns[j] for j in combo] + [columns[i]]) == size + 1
                if want != got:
                    return False
        return True

    def search(k: int) -> bool:
        nonlocal nodes
        if k == len(others):
            return True
        i = others[k]
        for col in choices[k]:
            nodes += 1
            if nodes > budget:
                raise TooLarge(f"representation search exceeded {budget} nodes")
            columns[i] = col
            if consistent(i) and search(k + 1):
                return True
            del columns[i]
        return False

    if not search(0):
        return None
    rep = Representation(ring, tuple(M.ground[i] for i in base_idx),
                         {M.ground[i]: columns[i] for i in range(n)})
    if matroid_from_representation(rep) != M:
        raise VerificationFailed("oracle witness does not represent the matroid")
    return rep
