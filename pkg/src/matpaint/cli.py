"""Command-line front end.

Exit codes: 0 success, 1 the property fails (a witness is printed),
2 a search budget was exceeded, 3 an internal consistency check failed.
``MATPAINT_BUDGET`` in the environment sets the budget when ``--budget`` is
not given.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import formats
from .acceptance import connected_graphs, random_graphs, run_suite
from .binary import EQUIVALENT, PREDICATES, evaluate
from .corpus import CorpusEntry, build_corpus
from .errors import (
    AxiomViolation,
    DomainMismatch,
    FormatError,
    MatroidError,
    PreconditionViolated,
    TooLarge,
    TraceInvariantViolated,
    VerificationFailed,
    WitnessVerificationFailed,
)
from .fields import ring_by_tag
from .graphs import cycle_matroid, graph_signing
from .linrep import brute_force_representable, matroid_from_representation
from .matroid import SCRAWL_BUDGET, check_scrawl_axioms
from .minors import build_named, has_minor_isomorphic
from .painting import (
    PAINTING_NODE_BUDGET,
    equivalence_witness_f3,
    find_painting,
    paint_from_representation,
    verify_painting,
)

OK, FAILS, TOO_LARGE, INCONSISTENT = 0, 1, 2, 3
BUDGET_ENV = "MATPAINT_BUDGET"


class Exit(Exception):
    def __init__(self, code: int, report: dict):
        self.code = code
        self.report = report


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise FormatError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _header(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line
    return ""


def _load_matroid(path: str):
    return formats.parse_matroid(_read(path))


def _emit_document(args, text: str) -> None:
    """Write a painting or witness to --out, or to stdout in text mode."""
    if args.out:
        Path(args.out).write_text(text)
    elif not args.json:
        sys.stdout.write(text)
        args.document_on_stdout = True


def _sets(family) -> list[list[str]]:
    return [list(s) for s in family]


# -- subcommands ----------------------------------------------------------------

def cmd_axioms(args) -> dict:
    try:
        M = _load_matroid(args.file)
    except AxiomViolation as exc:
        raise Exit(FAILS, {"valid": False, "axiom": exc.kind, "witness": _sets(exc.sets),
                           "message": str(exc)})
    budget = _budget(args) or SCRAWL_BUDGET
    report = check_scrawl_axioms(M, budget)
    result = {"valid": True, "elements": len(M), "rank": M.rank, "circuits": len(M.circuits),
              "cocircuits": len(M.cocircuits), "scrawls": report.scrawl_count,
              "scrawl_failures": report.failures}
    if not report.ok:
        raise Exit(INCONSISTENT, result)
    return result


def cmd_check_binary(args) -> dict:
    M = _load_matroid(args.file)
    names = EQUIVALENT if args.sweep else tuple(args.predicates.split(",")) if args.predicates else tuple(PREDICATES)
    unknown = [n for n in names if n not in PREDICATES]
    if unknown:
        raise FormatError(f"unknown predicates {unknown}; choose from {list(PREDICATES)}")
    verdicts = evaluate(M, names)
    result = {"predicates": {n: {"holds": v.holds, "witness": v.witness} for n, v in verdicts.items()}}
    values = {v.holds for v in verdicts.values()}
    if args.sweep:
        result["agree"] = len(values) == 1
        if len(values) > 1:
            raise Exit(INCONSISTENT, result)
    if False in values:
        raise Exit(FAILS, result)
    return result


def cmd_paint(args) -> dict:
    text = _read(args.file)
    ring = ring_by_tag(args.field) if args.field else None
    budget = _budget(args)
    if _header(text) == "matroid v1":
        M = formats.parse_matroid(text)
        if ring is None:
            raise FormatError("--field is required for a matroid file")
        if ring.is_field:
            kwargs = {} if budget is None else {"budget": budget}
            rep = brute_force_representable(M, ring, **kwargs)
            p = None if rep is None else paint_from_representation(rep, M)
        else:
            p = find_painting(M, ring, budget=budget or PAINTING_NODE_BUDGET)
        if p is None:
            raise Exit(FAILS, {"paintable": False, "field": ring.tag})
    else:
        rep = formats.parse_matrix(text)
        if ring is not None and ring is not rep.ring:
            raise FormatError(f"matrix is over {rep.ring.tag}, not {ring.tag}")
        M = matroid_from_representation(rep)
        p = paint_from_representation(rep, M)
    report = verify_painting(M, p)
    if not report.ok:
        raise VerificationFailed("constructed painting does not verify")
    _emit_document(args, formats.serialize_painting(p))
    return {"paintable": True, "field": p.ring.tag, "pairs_checked": report.pairs_checked,
            "painting": formats.painting_to_json(p)}


def cmd_verify_painting(args) -> dict:
    M = _load_matroid(args.matroid)
    p = formats.parse_painting(_read(args.painting))
    try:
        report = verify_painting(M, p)
    except DomainMismatch as exc:
        raise Exit(FAILS, {"verified": False, "domain_error": str(exc)})
    result = {"verified": report.ok, "pairs_checked": report.pairs_checked,
              "failures": [{"circuit": list(o), "cocircuit": list(b), "sum": p.ring.render(s)}
                           for o, b, s in report.failures]}
    if not report.ok:
        raise Exit(FAILS, result)
    return result


def cmd_find_minor(args) -> dict:
    M = _load_matroid(args.file)
    target = args.target
    N = _load_matroid(target) if Path(target).is_file() else build_named(target)
    w = has_minor_isomorphic(M, N)
    if w is None:
        raise Exit(FAILS, {"target": target, "found": False})
    return {"target": target, "found": True, "contract": sorted(w.spec.contract),
            "delete": sorted(w.spec.delete), "bijection": dict(sorted(w.bijection.items()))}


def cmd_sign_graph(args) -> dict:
    G = formats.parse_graph(_read(args.file))
    s = graph_signing(G)
    M = cycle_matroid(G)
    report = verify_painting(M, s.painting)
    if not report.ok:
        raise Exit(INCONSISTENT, {"verified": False})
    _emit_document(args, formats.serialize_painting(s.painting))
    return {"verified": True, "circuits": len(M.circuits), "bonds": len(M.cocircuits),
            "pairs_checked": report.pairs_checked,
            "painting": formats.painting_to_json(s.painting)}


def cmd_equiv(args) -> dict:
    M = _load_matroid(args.matroid)
    p1 = formats.parse_painting(_read(args.first))
    p2 = formats.parse_painting(_read(args.second))
    try:
        w = equivalence_witness_f3(M, p1, p2)
    except (PreconditionViolated, DomainMismatch) as exc:
        raise Exit(FAILS, {"equivalent": False, "reason": str(exc)})
    _emit_document(args, formats.serialize_witness(w))
    return {"equivalent": True, "witness": formats.witness_to_json(w)}


def _load_dir(directory: str) -> tuple[list[CorpusEntry], list]:
    entries, graphs = [], []
    for path in sorted(Path(directory).iterdir()):
        if not path.is_file():
            continue
        text = path.read_text()
        head = _header(text)
        name = f"file:{path.name}"
        if head == "matroid v1":
            entries.append(CorpusEntry(name, formats.parse_matroid(text)))
        elif head == "graph v1":
            G = formats.parse_graph(text)
            entries.append(CorpusEntry(name, cycle_matroid(G), graph=G))
            graphs.append((name, G))
        elif head.startswith(("field:", "cols:", "matrix v1")):
            rep = formats.parse_matrix(text)
            entries.append(CorpusEntry(name, matroid_from_representation(rep), {rep.ring.tag: rep}))
    return entries, graphs


def cmd_corpus(args) -> dict:
    entries = build_corpus(seed=args.seed, count=args.count)
    graphs = connected_graphs(4) + random_graphs(random.Random(args.seed), 20, 8)
    if args.dir:
        extra, extra_graphs = _load_dir(args.dir)
        entries = extra + entries
        graphs = extra_graphs + graphs
    results = run_suite(entries, seed=args.seed, budget=_budget(args), graphs=graphs)
    summary = {
        "seed": args.seed,
        "matroids": len(entries),
        "graphs": len(graphs),
        "criteria": [{"criterion": r.number, "name": r.name, "ok": r.ok, "instances": r.instances,
                      "skipped": r.skipped, "failures": r.failures} for r in results],
    }
    if not args.json:
        lines = [f"corpus seed={args.seed} matroids={len(entries)} graphs={len(graphs)}"]
        lines += [r.line() for r in results]
        for r in results:
            lines += [f"  criterion {r.number}: {f}" for f in r.failures[:5]]
        sys.stdout.write("\n".join(lines) + "\n")
    if not all(r.ok for r in results):
        raise Exit(INCONSISTENT, summary)
    return summary


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matpaint", description="Exact matroid painting toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--budget", type=int, default=None,
                        help=f"search budget (default from ${BUDGET_ENV}, else per-search default)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", parents=[common], help="validate a matroid file and its scrawls")
    p.add_argument("file")
    p.set_defaults(handler=cmd_axioms)

    p = sub.add_parser("check-binary", parents=[common], help="evaluate binary characterizations")
    p.add_argument("file")
    p.add_argument("--predicates", help="comma-separated subset of p1..p10")
    p.add_argument("--sweep", action="store_true", help="run p1-p9 and require agreement")
    p.set_defaults(handler=cmd_check_binary)

    p = sub.add_parser("paint", parents=[common], help="paint a matrix or matroid file")
    p.add_argument("file")
    p.add_argument("--field", help="gf2, gf3, gf4, regular or sixth_root")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_paint)

    p = sub.add_parser("verify-painting", parents=[common], help="check the painting condition")
    p.add_argument("matroid")
    p.add_argument("painting")
    p.set_defaults(handler=cmd_verify_painting)

    p = sub.add_parser("find-minor", parents=[common], help="search for a minor isomorphic to a target")
    p.add_argument("file")
    p.add_argument("--target", required=True, help="u{k}_{n}, fano, fano_dual or a matroid file")
    p.set_defaults(handler=cmd_find_minor)

    p = sub.add_parser("sign-graph", parents=[common], help="signing of a directed graph")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sign_graph)

    p = sub.add_parser("equiv", parents=[common], help="equivalence witness for two GF(3) paintings")
    p.add_argument("matroid")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("corpus", parents=[common], help="run every acceptance check over a corpus")
    p.add_argument("--dir", help="directory of matroid, matrix and graph files to include")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=250, help="number of random matrix matroids")
    p.set_defaults(handler=cmd_corpus)
    return parser


def _print_json(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _print_text(args, report: dict) -> None:
    if "criteria" in report:
        return  # the corpus table was already printed
    stream = sys.stderr if getattr(args, "document_on_stdout", False) else sys.stdout
    for key in sorted(report):
        value = report[key]
        if key in ("painting", "witness"):
            continue
        if key == "predicates":
            for name, v in value.items():
                line = f"{name}: {'holds' if v['holds'] else 'fails'}"
                if v["witness"]:
                    line += f" ({v['witness']})"
                stream.write(line + "\n")
            continue
        stream.write(f"{key}: {value}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.handler(args), OK
    except Exit as exc:
        report, code = exc.report, exc.code
    except TooLarge as exc:
        report, code = {"error": "budget exceeded", "message": str(exc)}, TOO_LARGE
    except (VerificationFailed, WitnessVerificationFailed, TraceInvariantViolated) as exc:
        report, code = {"error": "internal consistency failure", "message": str(exc)}, INCONSISTENT
    except (FormatError, AxiomViolation) as exc:
        report, code = {"error": "invalid input", "message": str(exc)}, FAILS
    except MatroidError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, FAILS
    if args.json:
        _print_json(report)
    else:
        _print_text(args, report)
    return code


if __name__ == "__main__":
    sys.exit(main())
