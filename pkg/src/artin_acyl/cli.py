"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
JSON output uses sorted keys, so identical input gives identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from .certificate import RankOneCertificate, failed_assertions
from .classifier import classify
from .errors import ArtinError, CertificateMismatch, GraphError, PreconditionError
from .graph import DirectedLabeledGraph, LabeledGraph, graph_to_dict, parse_graph
from .link import Metric, build_link
from .orientation import find_appropriate_direction, validate_orientation
from .presentation import Presentation, bm_presentation, standard_presentation
from .selftest import MAX_SWEEP_VERTICES, run_selftest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


@dataclass
class Outcome:
    status: int
    data: dict
    text: str


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _load_graph(path: str) -> LabeledGraph | DirectedLabeledGraph:
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _directed(g) -> DirectedLabeledGraph:
    return g if isinstance(g, DirectedLabeledGraph) else DirectedLabeledGraph.lexicographic(g)


def _labels(raw: str) -> list[int]:
    try:
        out = [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad label list {raw!r}") from None
    if not out or min(out) < 2:
        raise argparse.ArgumentTypeError("labels must be integers >= 2")
    return out


def cmd_classify(args) -> Outcome:
    report = classify(_load_graph(args.input))
    d = report.to_dict()
    return Outcome(EXIT_OK, d, f"{d['verdict']} ({d['route']})")


def cmd_present(args) -> Outcome:
    g = _load_graph(args.input)
    p: Presentation = bm_presentation(_directed(g)) if args.kind == "bm" else standard_presentation(g)
    d = {"kind": args.kind, **p.to_dict()}
    return Outcome(EXIT_OK, d, p.format())


def cmd_link(args) -> Outcome:
    L = build_link(_directed(_load_graph(args.input)), args.mode)
    nv, ne = L.shape
    return Outcome(EXIT_OK, L.to_dict(), f"{args.mode} link: {nv} vertices, {ne} edges")


def cmd_orient(args) -> Outcome:
    g = _load_graph(args.input)
    if isinstance(g, DirectedLabeledGraph):
        rep = validate_orientation(g)
        d = {"given": True, **rep.to_dict()}
        return Outcome(EXIT_OK if rep.verdict else EXIT_FAILED, d,
                       "appropriate" if rep.verdict else "not appropriate")
    found = find_appropriate_direction(g)
    if found is None:
        return Outcome(EXIT_OK, {"given": False, "found": False}, "no appropriate direction")
    dg, method = found
    d = {"given": False, "found": True, "method": method, "graph": graph_to_dict(dg)}
    return Outcome(EXIT_OK, d, f"found by {method}")


def cmd_certify(args) -> Outcome:
    if args.check:
        try:
            cert = RankOneCertificate.from_dict(json.loads(_read(args.check)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.check}: malformed certificate ({exc})") from exc
        graph = cert.graph
        if args.graph_given:
            graph = _load_graph(args.input)
            if not isinstance(graph, DirectedLabeledGraph):
                raise InputError(f"{args.input}: certificate check needs a directed graph")
        try:
            bad = failed_assertions(cert, build_link(graph, cert.metric))
        except CertificateMismatch as exc:
            bad, why = None, str(exc)
        if bad is None:
            return Outcome(EXIT_FAILED, {"valid": False, "reason": why}, f"invalid: {why}")
        d = {"valid": not bad, "failed": [a.describe() for a in bad]}
        text = "valid" if not bad else "invalid: " + "; ".join(d["failed"])
        return Outcome(EXIT_OK if not bad else EXIT_FAILED, d, text)
    report = classify(_load_graph(args.input))
    if report.certificate is None:
        d = {"certificate": None, "verdict": report.verdict.value, "route": report.route}
        return Outcome(EXIT_OK, d, f"no certificate: {report.verdict.value} ({report.route})")
    d = report.certificate.to_dict()
    return Outcome(EXIT_OK, d, f"{d['mode']} certificate, witness {d['witness']['text']}")


def cmd_selftest(args) -> Outcome:
    if not 3 <= args.max_vertices <= MAX_SWEEP_VERTICES:
        raise InputError(f"--max-vertices must be between 3 and {MAX_SWEEP_VERTICES}")
    summary = run_selftest(args.max_vertices, args.labels)
    text = (
        f"{summary['triangle_free_graphs']} triangle-free, {summary['almost_large_graphs']} almost-large "
        f"({summary['appropriate_directions']} directions): {summary['mismatches']} mismatches"
    )
    return Outcome(EXIT_OK if summary["ok"] else EXIT_FAILED, summary, text)


HANDLERS = {
    "classify": cmd_classify,
    "present": cmd_present,
    "link": cmd_link,
    "orient": cmd_orient,
    "certify": cmd_certify,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="graph JSON file, or - for stdin")

    p = argparse.ArgumentParser(prog="artin-acyl", description="Artin-Tits groups of labeled graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common, graph_in], help="classify a graph")
    pr = sub.add_parser("present", parents=[common, graph_in], help="print a presentation")
    pr.add_argument("--kind", choices=("standard", "bm"), default="standard")
    ln = sub.add_parser("link", parents=[common, graph_in], help="print the vertex link")
    ln.add_argument("--mode", choices=[m.value for m in Metric], default=Metric.ISOSCELES.value)
    sub.add_parser("orient", parents=[common, graph_in], help="find or validate a direction")
    ce = sub.add_parser("certify", parents=[common, graph_in], help="build or check a certificate")
    ce.add_argument("--check", metavar="CERT", help="verify this certificate file instead")
    st = sub.add_parser("selftest", parents=[common], help="oracle-backed sweeps")
    st.add_argument("--max-vertices", type=int, default=5)
    st.add_argument("--labels", type=_labels, default=None, help="comma-separated, e.g. 2,3,4")
    return p


def _emit(out: Outcome, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(out.data, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(out.text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    args.graph_given = getattr(args, "input", "-") != "-"
    try:
        out = HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArtinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(out, args.format)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
