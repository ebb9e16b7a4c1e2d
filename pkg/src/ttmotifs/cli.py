"""Command-line interface and the JSON document format.

Subcommands: decompose (run a construction), counts (closed-form table),
verify (check a document), oracle (exact search).  Exit codes are shared
by every subcommand that classifies a collection: 0 for a valid
decomposition, 3 for a valid packing that is not a decomposition, 1 for
an invalid collection, 2 for usage errors and malformed input.  All
output is deterministic and newline-terminated.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Any

from .analysis import (
    COVERAGE_GAP,
    VerificationReport,
    Violation,
    is_admissible,
    mixed_counts,
    packing_number,
    packing_number_table,
    center_capacity,
    verify,
)
from .constructions import STRATEGIES, MotifCollection
from .core import CHAIN, COLLIDER, FORK, MOTIF_KINDS, Arc, Motif, TransitiveTournament, chain, collider, fork
from .diagram import Diagram
from .oracle import SearchBudget, max_packing

EXIT_DECOMPOSITION = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PACKING = 3

SCHEMA_VERSION = "1"

KIND_DECOMPOSITION = "decomposition"
KIND_PACKING = "packing"


class DocumentError(ValueError):
    """The input does not parse as a collection document."""


@dataclass(frozen=True)
class CollectionDocument:
    """Parsed form of the JSON interchange document."""

    n: int
    kind: str  # declared: "decomposition" | "packing"
    motifs: tuple[Motif, ...]
    unused_arcs: tuple[Arc, ...]  # declared

    def to_collection(self) -> MotifCollection:
        return MotifCollection(self.n, self.motifs)


def document_from_collection(collection: MotifCollection) -> CollectionDocument:
    unused = tuple(sorted(collection.unused_arcs))
    return CollectionDocument(
        n=collection.n,
        kind=KIND_DECOMPOSITION if not unused else KIND_PACKING,
        motifs=collection.motifs,
        unused_arcs=unused,
    )


def _json_block(key: str, items: list[str], last: bool = False) -> list[str]:
    """An indented JSON array field with one item per line."""
    comma = "" if last else ","
    if not items:
        return [f'  "{key}": []{comma}']
    lines = [f'  "{key}": [']
    lines.extend(f"    {item}," for item in items[:-1])
    lines.append(f"    {items[-1]}")
    lines.append(f"  ]{comma}")
    return lines


def document_to_json(document: CollectionDocument) -> str:
    motifs = [
        json.dumps({"type": motif.kind, "vertices": list(motif.vertices)})
        for motif in document.motifs
    ]
    unused = [json.dumps(list(arc)) for arc in document.unused_arcs]
    lines = [
        "{",
        f'  "schema_version": {json.dumps(SCHEMA_VERSION)},',
        f'  "n": {document.n},',
        f'  "kind": {json.dumps(document.kind)},',
        *_json_block("motifs", motifs),
        *_json_block("unused_arcs", unused, last=True),
        "}",
    ]
    return "\n".join(lines) + "\n"


def _expect_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def document_from_json(text: str) -> CollectionDocument:
    """Parse and structurally validate a document; content problems
    (bad canonical form, duplicate arcs, wrong declared kind) are left
    for verification."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DocumentError("document must be a JSON object")
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(
            f"unsupported schema_version {payload.get('schema_version')!r}; expected {SCHEMA_VERSION!r}"
        )
    for key in ("n", "kind", "motifs", "unused_arcs"):
        if key not in payload:
            raise DocumentError(f"missing field {key!r}")
    n = _expect_int(payload["n"], "n")
    if n < 1:
        raise DocumentError(f"n must be at least 1, got {n}")
    kind = payload["kind"]
    if kind not in (KIND_DECOMPOSITION, KIND_PACKING):
        raise DocumentError(f"kind must be 'decomposition' or 'packing', got {kind!r}")
    raw_motifs = payload["motifs"]
    if not isinstance(raw_motifs, list):
        raise DocumentError("motifs must be a list")
    motifs: list[Motif] = []
    for position, entry in enumerate(raw_motifs):
        if not isinstance(entry, dict):
            raise DocumentError(f"motif {position} must be an object")
        motif_type = entry.get("type")
        if motif_type not in MOTIF_KINDS:
            raise DocumentError(f"motif {position} has unknown type {motif_type!r}")
        vertices = entry.get("vertices")
        if not isinstance(vertices, list) or len(vertices) != 3:
            raise DocumentError(f"motif {position} needs a vertices list of length 3")
        triple = tuple(_expect_int(v, f"motif {position} vertex") for v in vertices)
        motifs.append(Motif(motif_type, triple))
    raw_unused = payload["unused_arcs"]
    if not isinstance(raw_unused, list):
        raise DocumentError("unused_arcs must be a list")
    unused: list[Arc] = []
    for position, entry in enumerate(raw_unused):
        if not isinstance(entry, list) or len(entry) != 2:
            raise DocumentError(f"unused arc {position} must be a [tail, head] pair")
        unused.append(tuple(_expect_int(v, f"unused arc {position} endpoint") for v in entry))
    return CollectionDocument(n=n, kind=kind, motifs=tuple(motifs), unused_arcs=tuple(unused))


# --- arrow notation ---------------------------------------------------------

_CHAIN_LINE = re.compile(r"^v(\d+) -> v(\d+) -> v(\d+)$")
_COLLIDER_LINE = re.compile(r"^v(\d+) -> v(\d+) <- v(\d+)$")
_FORK_LINE = re.compile(r"^v(\d+) <- v(\d+) -> v(\d+)$")


def motif_to_text(motif: Motif) -> str:
    a, b, c = motif.vertices
    if motif.kind == CHAIN:
        return f"v{a} -> v{b} -> v{c}"
    if motif.kind == COLLIDER:
        return f"v{a} -> v{c} <- v{b}"
    if motif.kind == FORK:
        return f"v{b} <- v{a} -> v{c}"
    raise ValueError(f"unknown motif kind {motif.kind!r}")


def parse_motif_line(line: str) -> Motif:
    """Inverse of motif_to_text; accepts either writing order of the
    symmetric pair and returns the canonical motif."""
    match = _CHAIN_LINE.match(line)
    if match:
        a, b, c = map(int, match.groups())
        return chain(a, b, c)
    match = _COLLIDER_LINE.match(line)
    if match:
        a, c, b = map(int, match.groups())
        return collider(a, b, c)
    match = _FORK_LINE.match(line)
    if match:
        b, a, c = map(int, match.groups())
        return fork(a, b, c)
    raise ValueError(f"not a motif line: {line!r}")


# --- shared rendering -------------------------------------------------------


def _document_violations(document: CollectionDocument, collection: MotifCollection) -> list[Violation]:
    """Consistency of the document's declared fields with its motifs."""
    findings: list[Violation] = []
    derived_unused = tuple(sorted(collection.unused_arcs))
    declared_unused = tuple(sorted(document.unused_arcs))
    if declared_unused != derived_unused:
        findings.append(
            Violation(
                COVERAGE_GAP,
                "declared unused_arcs disagree with the arcs actually left uncovered "
                f"(declared {len(declared_unused)}, actual {len(derived_unused)})",
            )
        )
    derived_kind = KIND_DECOMPOSITION if not derived_unused else KIND_PACKING
    if document.kind != derived_kind:
        findings.append(
            Violation(
                COVERAGE_GAP,
                f"document declares a {document.kind} but the motifs form a {derived_kind}",
            )
        )
    return findings


def _violation_lines(violations: tuple[Violation, ...]) -> list[str]:
    lines = ["violations:"]
    for violation in violations:
        suffix = ""
        if violation.motifs:
            suffix = f": motifs {', '.join(str(i) for i in violation.motifs)}"
        lines.append(f"  {violation.detail}{suffix}")
    return lines


def _report_text(report: VerificationReport, collection: MotifCollection) -> str:
    lines = [
        f"n: {report.n}",
        f"motifs: {len(collection.motifs)}",
        f"counts: chains {report.counts.chains}, colliders {report.counts.colliders}, forks {report.counts.forks}",
        f"unused arcs: {len(collection.unused_arcs)}",
        f"valid: {'yes' if report.valid else 'no'}",
        f"decomposition: {'yes' if report.is_decomposition else 'no'}",
    ]
    if report.violations:
        lines.extend(_violation_lines(report.violations))
    return "\n".join(lines) + "\n"


def _report_json(report: VerificationReport, collection: MotifCollection) -> str:
    payload = {
        "n": report.n,
        "motifs": len(collection.motifs),
        "counts": {
            "chains": report.counts.chains,
            "colliders": report.counts.colliders,
            "forks": report.counts.forks,
        },
        "unused_arcs": len(collection.unused_arcs),
        "valid": report.valid,
        "is_decomposition": report.is_decomposition,
        "violations": [
            {
                "kind": violation.kind,
                "detail": violation.detail,
                "motifs": list(violation.motifs),
                "arc": list(violation.arc) if violation.arc is not None else None,
            }
            for violation in report.violations
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _classification_exit(report: VerificationReport) -> int:
    if not report.valid:
        return EXIT_INVALID
    return EXIT_DECOMPOSITION if report.is_decomposition else EXIT_PACKING


# --- subcommands ------------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    collection = STRATEGIES[args.strategy](args.n)
    report = verify(collection)
    if not report.valid:  # constructions are total; this is a tripwire
        sys.stderr.write("internal error: construction failed verification\n")
        sys.stderr.write(_report_text(report, collection))
        return EXIT_INVALID
    if args.format == "json":
        sys.stdout.write(document_to_json(document_from_collection(collection)))
    elif args.format == "text":
        for motif in collection.motifs:
            print(motif_to_text(motif))
    else:  # diagram
        try:
            print(Diagram(args.n).render_ascii(highlight=collection))
        except ValueError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_USAGE
    if not report.is_decomposition:
        unused = sorted(collection.unused_arcs)
        sys.stderr.write(
            f"warning: n = {args.n} admits no decomposition; "
            f"packing leaves {len(unused)} arc(s) unused: "
            + ", ".join(f"({i},{j})" for i, j in unused)
            + "\n"
        )
    return _classification_exit(report)


def cmd_counts(args: argparse.Namespace) -> int:
    n = args.n
    table = packing_number_table(n)
    admissible = is_admissible(n)
    mixed = mixed_counts(n) if admissible else None
    capacities = [
        {
            "vertex": t,
            "chain": center_capacity(CHAIN, n, t),
            "collider": center_capacity(COLLIDER, n, t),
            "fork": center_capacity(FORK, n, t),
        }
        for t in range(1, n + 1)
    ]
    if args.format == "json":
        payload = {
            "n": n,
            "admissible": admissible,
            "arcs": TransitiveTournament(n).arc_count,
            "motif_slots": table.total_motif_slots,
            "packing_numbers": {kind: table.per_kind[kind] for kind in MOTIF_KINDS},
            "mixed_counts": (
                {"chains": mixed.chains, "colliders": mixed.colliders, "forks": mixed.forks}
                if mixed is not None
                else None
            ),
            "center_capacities": capacities,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_DECOMPOSITION
    lines = [
        f"n: {n}",
        f"admissible: {'yes' if admissible else 'no'}",
        f"arcs: {TransitiveTournament(n).arc_count}",
        f"motif slots: {table.total_motif_slots if table.total_motif_slots is not None else '-'}",
        "packing numbers: "
        + ", ".join(f"{kind} {table.per_kind[kind]}" for kind in MOTIF_KINDS),
        (
            f"mixed counts: chains {mixed.chains}, colliders {mixed.colliders}, forks {mixed.forks}"
            if mixed is not None
            else "mixed counts: - (not admissible)"
        ),
        "center capacities (vertex: chain collider fork):",
    ]
    for row in capacities:
        lines.append(f"  {row['vertex']}: {row['chain']} {row['collider']} {row['fork']}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_DECOMPOSITION


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            sys.stderr.write(f"error: cannot read {args.input}: {exc}\n")
            return EXIT_USAGE
    try:
        document = document_from_json(text)
    except DocumentError as exc:
        sys.stderr.write(f"error: malformed document: {exc}\n")
        return EXIT_USAGE
    collection = document.to_collection()
    report = verify(collection)
    extra = _document_violations(document, collection)
    if extra:
        report = VerificationReport(
            n=report.n,
            valid=False,
            is_decomposition=False,
            counts=report.counts,
            violations=report.violations + tuple(extra),
        )
    if args.format == "json":
        sys.stdout.write(_report_json(report, collection))
    else:
        sys.stdout.write(_report_text(report, collection))
    return _classification_exit(report)


def cmd_oracle(args: argparse.Namespace) -> int:
    budget = SearchBudget(
        max_nodes=args.max_nodes if args.max_nodes is not None else SearchBudget().max_nodes,
        max_time=args.max_time,
    )
    result = max_packing(args.kind, args.n, budget)
    formula = packing_number(args.kind, args.n)
    if not result.exhausted:
        comparison = f"INCONCLUSIVE (lower bound {result.optimum})"
        comparison_code = "INCONCLUSIVE"
    elif result.optimum == formula:
        comparison = "MATCH"
        comparison_code = "MATCH"
    else:
        comparison = "MISMATCH"
        comparison_code = "MISMATCH"
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "n": args.n,
            "optimum": result.optimum,
            "exhausted": result.exhausted,
            "nodes": result.nodes,
            "packing_number": formula,
            "comparison": comparison_code,
        }
        if args.witness:
            payload["witness"] = [
                {"type": motif.kind, "vertices": list(motif.vertices)}
                for motif in result.witness.motifs
            ]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_DECOMPOSITION
    lines = [
        f"kind: {args.kind}",
        f"n: {args.n}",
        f"optimum: {result.optimum}",
        f"exhausted: {'yes' if result.exhausted else 'no'}",
        f"nodes: {result.nodes}",
        f"packing number: {formula}",
        f"comparison: {comparison}",
    ]
    if args.witness:
        lines.append("witness:")
        lines.extend(f"  {motif_to_text(motif)}" for motif in result.witness.motifs)
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_DECOMPOSITION


# --- parser -----------------------------------------------------------------


def _positive_order(parser: argparse.ArgumentParser, value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        parser.error(f"--n expects an integer, got {value!r}")
    if n < 1:
        parser.error(f"--n must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttmotifs",
        description=(
            "Pack and decompose transitive tournaments into two-arc motifs "
            "(chains, colliders, forks)."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    decompose = subparsers.add_parser(
        "decompose", help="run a deterministic construction for TT_n"
    )
    decompose.add_argument("--n", required=True, type=lambda v: _positive_order(decompose, v))
    decompose.add_argument(
        "--strategy", choices=sorted(STRATEGIES), default="mixed",
        help="which construction to run (default: mixed)",
    )
    decompose.add_argument(
        "--format", choices=("json", "text", "diagram"), default="text",
        help="output form (default: text)",
    )
    decompose.set_defaults(func=cmd_decompose)

    counts = subparsers.add_parser("counts", help="closed-form counts for TT_n")
    counts.add_argument("--n", required=True, type=lambda v: _positive_order(counts, v))
    counts.add_argument("--format", choices=("json", "text"), default="text")
    counts.set_defaults(func=cmd_counts)

    verify_cmd = subparsers.add_parser(
        "verify", help="verify a collection document (JSON from --input or stdin)"
    )
    verify_cmd.add_argument("--input", help="path to the document; '-' or absent reads stdin")
    verify_cmd.add_argument("--format", choices=("json", "text"), default="text")
    verify_cmd.set_defaults(func=cmd_verify)

    oracle_cmd = subparsers.add_parser(
        "oracle", help="exact branch-and-bound maximum packing search"
    )
    oracle_cmd.add_argument("--kind", required=True, choices=MOTIF_KINDS)
    oracle_cmd.add_argument("--n", required=True, type=lambda v: _positive_order(oracle_cmd, v))
    oracle_cmd.add_argument("--max-nodes", type=int, help="node expansion budget")
    oracle_cmd.add_argument("--max-time", type=float, help="wall-clock budget in seconds")
    oracle_cmd.add_argument("--witness", action="store_true", help="print the witness packing")
    oracle_cmd.add_argument("--format", choices=("json", "text"), default="text")
    oracle_cmd.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
