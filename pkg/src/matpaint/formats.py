"""Text formats for matroids, matrices, graphs, paintings and witnesses.

Every format is line based; blank lines and ``#`` comments are ignored.
Serializers emit a canonical form (sorted labels, sets in lexicographic
order), so parse -> serialize -> parse is the identity on structures and
serialize -> parse -> serialize is the identity on text.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FormatError
from .fields import Automorphism, Ring, ring_by_tag
from .graphs import DirectedGraph
from .linrep import Representation
from .matroid import Matroid, matroid_from_circuits
from .painting import EquivalenceWitness, Painting


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _key_value(n: int, line: str) -> tuple[str, str]:
    if ":" not in line:
        raise FormatError(f"line {n}: expected 'key: value', got {line!r}")
    key, value = line.split(":", 1)
    return key.strip(), value.strip()


def _set_key(s: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(s))


def _expect_header(lines: list[tuple[int, str]], header: str) -> list[tuple[int, str]]:
    if not lines or lines[0][1] != header:
        raise FormatError(f"expected header {header!r}")
    return lines[1:]


# -- matroids ----------------------------------------------------------------

def parse_matroid(text: str) -> Matroid:
    """``matroid v1`` / ``elements: ...`` / ``circuit: ...`` lines; validated."""
    lines = _expect_header(list(_lines(text)), "matroid v1")
    elements: list[str] | None = None
    circuits = []
    for n, line in lines:
        key, value = _key_value(n, line)
        if key == "elements":
            if elements is not None:
                raise FormatError(f"line {n}: repeated elements line")
            elements = value.split()
        elif key == "circuit":
            circuits.append(value.split())
        else:
            raise FormatError(f"line {n}: unknown key {key!r}")
    if elements is None:
        raise FormatError("missing elements line")
    if len(set(elements)) != len(elements):
        raise FormatError("duplicate element labels")
    return matroid_from_circuits(elements, circuits)


def serialize_matroid(M: Matroid) -> str:
    out = ["matroid v1", "elements: " + " ".join(M.ground)]
    out += ["circuit: " + " ".join(M.sorted_labels(m)) for m in M.circuit_masks]
    return "\n".join(out) + "\n"


# -- matrices ----------------------------------------------------------------

def parse_matrix(text: str) -> Representation:
    """``field:`` and ``cols:`` lines followed by one row per line."""
    lines = list(_lines(text))
    if lines and lines[0][1] == "matrix v1":
        lines = lines[1:]
    ring: Ring | None = None
    cols: list[str] | None = None
    rows = []
    for n, line in lines:
        if line.startswith("field:"):
            ring = ring_by_tag(_key_value(n, line)[1])
        elif line.startswith("cols:"):
            cols = _key_value(n, line)[1].split()
        else:
            if ring is None or cols is None:
                raise FormatError(f"line {n}: row before field/cols header")
            entries = line.split()
            if len(entries) != len(cols):
                raise FormatError(f"line {n}: {len(entries)} entries, expected {len(cols)}")
            rows.append([ring.parse(x) for x in entries])
    if ring is None or cols is None:
        raise FormatError("matrix needs field and cols lines")
    if not ring.is_field:
        raise FormatError(f"matrix field must be gf2, gf3 or gf4, not {ring.tag}")
    if len(set(cols)) != len(cols):
        raise FormatError("duplicate column labels")
    return Representation.from_rows(ring, cols, rows)


def serialize_matrix(rep: Representation) -> str:
    ring = rep.ring
    labels = rep.ground
    out = [f"field: {ring.tag}", "cols: " + " ".join(labels)]
    for row in rep.matrix():
        out.append(" ".join(ring.render(v) for v in row))
    return "\n".join(out) + "\n"


# -- graphs ------------------------------------------------------------------

def parse_graph(text: str) -> DirectedGraph:
    """``graph v1`` / ``edge: <label> <source> <target>`` / ``vertex: <v>``."""
    lines = _expect_header(list(_lines(text)), "graph v1")
    edges = []
    vertices = []
    for n, line in lines:
        key, value = _key_value(n, line)
        parts = value.split()
        if key == "edge":
            if len(parts) != 3:
                raise FormatError(f"line {n}: edge needs label, source and target")
            edges.append(tuple(parts))
        elif key == "vertex":
            vertices += parts
        else:
            raise FormatError(f"line {n}: unknown key {key!r}")
    return DirectedGraph.from_edges(edges, vertices)


def serialize_graph(G: DirectedGraph) -> str:
    out = ["graph v1"]
    used = {v for _, s, t in G.edges for v in (s, t)}
    out += [f"vertex: {v}" for v in G.vertices if v not in used]
    out += [f"edge: {e} {s} {t}" for e, s, t in G.edges]
    return "\n".join(out) + "\n"


# -- paintings ---------------------------------------------------------------

def _parse_assignments(ring: Ring, n: int, body: str, domain: tuple[str, ...]) -> dict:
    vals = {}
    for item in body.split():
        if "=" not in item:
            raise FormatError(f"line {n}: expected element=value, got {item!r}")
        e, v = item.split("=", 1)
        if e in vals:
            raise FormatError(f"line {n}: repeated element {e!r}")
        vals[e] = ring.parse(v)
    if set(vals) != set(domain):
        raise FormatError(f"line {n}: values given for {sorted(vals)}, expected {list(domain)}")
    return vals


def parse_painting(text: str) -> Painting:
    """``painting v1`` / ``field: <tag>`` / ``circuit <set>: e=v ...`` /
    ``cocircuit <set>: e=v ...``."""
    lines = _expect_header(list(_lines(text)), "painting v1")
    ring: Ring | None = None
    cvals: dict[frozenset, dict] = {}
    dvals: dict[frozenset, dict] = {}
    for n, line in lines:
        head, body = _key_value(n, line)
        words = head.split()
        if words == ["field"]:
            ring = ring_by_tag(body)
            continue
        if not words or words[0] not in ("circuit", "cocircuit"):
            raise FormatError(f"line {n}: unknown line {line!r}")
        if ring is None:
            raise FormatError(f"line {n}: field line must come first")
        s = frozenset(words[1:])
        target = cvals if words[0] == "circuit" else dvals
        if s in target:
            raise FormatError(f"line {n}: repeated {words[0]} {sorted(s)}")
        target[s] = _parse_assignments(ring, n, body, _set_key(s))
    if ring is None:
        raise FormatError("missing field line")
    return Painting(ring, cvals, dvals)


def _assignments(ring: Ring, s: frozenset, vals) -> str:
    return " ".join(f"{e}={ring.render(vals[e])}" for e in _set_key(s))


def serialize_painting(p: Painting) -> str:
    ring = p.ring
    out = ["painting v1", f"field: {ring.tag}"]
    for o in sorted(p.circuit_values, key=_set_key):
        out.append(f"circuit {' '.join(_set_key(o))}: {_assignments(ring, o, p.circuit_values[o])}")
    for b in sorted(p.cocircuit_values, key=_set_key):
        out.append(f"cocircuit {' '.join(_set_key(b))}: {_assignments(ring, b, p.cocircuit_values[b])}")
    return "\n".join(out) + "\n"


def painting_to_json(p: Painting) -> dict:
    ring = p.ring
    return {
        "field": ring.tag,
        "circuits": [{"set": list(_set_key(o)),
                      "values": {e: ring.render(p.circuit_values[o][e]) for e in _set_key(o)}}
                     for o in sorted(p.circuit_values, key=_set_key)],
        "cocircuits": [{"set": list(_set_key(b)),
                        "values": {e: ring.render(p.cocircuit_values[b][e]) for e in _set_key(b)}}
                       for b in sorted(p.cocircuit_values, key=_set_key)],
    }


# -- equivalence witnesses ---------------------------------------------------

_PHI = {"identity": 0, "frobenius": 1}


def serialize_witness(w: EquivalenceWitness) -> str:
    ring = w.phi.ring
    out = ["witness v1", f"field: {ring.tag}", f"phi: {w.phi.name}"]
    out += [f"element {e}: {ring.render(w.element_scalars[e])}" for e in sorted(w.element_scalars)]
    for o in sorted(w.circuit_scalars, key=_set_key):
        out.append(f"circuit {' '.join(_set_key(o))}: {ring.render(w.circuit_scalars[o])}")
    for b in sorted(w.cocircuit_scalars, key=_set_key):
        out.append(f"cocircuit {' '.join(_set_key(b))}: {ring.render(w.cocircuit_scalars[b])}")
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> EquivalenceWitness:
    lines = _expect_header(list(_lines(text)), "witness v1")
    ring: Ring | None = None
    phi = 0
    xs, xo, xb = {}, {}, {}
    for n, line in lines:
        head, body = _key_value(n, line)
        words = head.split()
        if words == ["field"]:
            ring = ring_by_tag(body)
        elif words == ["phi"]:
            if body not in _PHI:
                raise FormatError(f"line {n}: unknown automorphism {body!r}")
            phi = _PHI[body]
        elif ring is None:
            raise FormatError(f"line {n}: field line must come first")
        elif words[0] == "element" and len(words) == 2:
            xs[words[1]] = ring.parse(body)
        elif words[0] == "circuit":
            xo[frozenset(words[1:])] = ring.parse(body)
        elif words[0] == "cocircuit":
            xb[frozenset(words[1:])] = ring.parse(body)
        else:
            raise FormatError(f"line {n}: unknown line {line!r}")
    if ring is None:
        raise FormatError("missing field line")
    return EquivalenceWitness(xs, xo, xb, Automorphism(ring, phi))


def witness_to_json(w: EquivalenceWitness) -> dict:
    ring = w.phi.ring
    return {
        "field": ring.tag,
        "phi": w.phi.name,
        "elements": {e: ring.render(w.element_scalars[e]) for e in sorted(w.element_scalars)},
        "circuits": [[list(_set_key(o)), ring.render(w.circuit_scalars[o])]
                     for o in sorted(w.circuit_scalars, key=_set_key)],
        "cocircuits": [[list(_set_key(b)), ring.render(w.cocircuit_scalars[b])]
                       for b in sorted(w.cocircuit_scalars, key=_set_key)],
    }
