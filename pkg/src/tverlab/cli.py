"""Command-line front end.

Every command prints one JSON report to stdout (schema 1) and exits 0 iff
all checks in the report passed.  Usage errors exit 2; degenerate input
exits 3.  Reports are byte-identical for identical (command, flags, seed);
wall-clock time is only included behind --timing.
"""

import argparse
import json
import re
import sys
import time

from . import drivers
from .config_io import format_scalar, parse_configuration
from .constraints import (
    CompleteK,
    ConstraintGraph,
    Cycle,
    DisjointUnion,
    Path,
    Star,
    constrained_records,
    instantiate,
    witness_search,
)
from .errors import Degenerate, TverlabError
from .geometry import PointConfiguration
from .partitions import enumerate_candidate_partitions
from .svg import render_svg
from .tverberg import counting_report, tverberg_records

GRAPH_COMPONENTS = {
    "k": CompleteK,
    "star": Star,
    "path": Path,
    "cycle": Cycle,
}


def parse_graph_spec(text):
    """Family spec strings: 'k2', 'star2', 'path3', 'cycle5', or unions
    joined with '+' ('k2+path2')."""
    parts = []
    for piece in text.lower().split("+"):
        m = re.fullmatch(r"(k|star|path|cycle)(\d+)", piece.strip())
        if m is None:
            raise argparse.ArgumentTypeError(
                f"bad graph spec {piece!r}; expected k<l>, star<l>, path<l>, or cycle<l>"
            )
        parts.append(GRAPH_COMPONENTS[m.group(1)](int(m.group(2))))
    return parts[0] if len(parts) == 1 else DisjointUnion(tuple(parts))


def _graph_for(spec_text, n):
    if spec_text.startswith("edges:"):
        edges = []
        for token in spec_text[len("edges:") :].split(","):
            a, b = token.split("-")
            edges.append((int(a), int(b)))
        return ConstraintGraph(n, frozenset(tuple(sorted(e)) for e in edges))
    return instantiate(parse_graph_spec(spec_text), n)


def _point_strings(point):
    return [format_scalar(c) for c in point]


def _record_dict(record):
    return {
        "partition": [list(b) for b in record.partition],
        "type": record.describe(),
        "point": _point_strings(record.point),
    }


def _load_config(path) -> PointConfiguration:
    with open(path) as fh:
        return parse_configuration(fh.read())


# ---------------------------------------------------------------------------
# Command implementations; each returns (report_dict, ok)

def cmd_enumerate(args):
    if args.input:
        config = _load_config(args.input)
        records = tverberg_records(config)
        report = counting_report(config, records=records)
        report["records"] = [_record_dict(r) for r in records]
        return report, True
    n = (args.d + 1) * (args.q - 1) + 1
    candidates = list(enumerate_candidate_partitions(n, args.q, args.d))
    report = {
        "d": args.d,
        "q": args.q,
        "n": n,
        "candidates": len(candidates),
    }
    if len(candidates) <= 200:
        report["partitions"] = [[list(b) for b in p] for p in candidates]
    return report, True


def cmd_count(args):
    report = drivers.counting_campaign(args.d, args.q, args.samples, args.seed)
    return report, report["ok"]


def cmd_constrain(args):
    if args.input:
        config = _load_config(args.input)
        n = len(config.points)
        graph = _graph_for(args.graph, n) if args.graph else ConstraintGraph(n, frozenset())
        records = tverberg_records(config)
        kept = constrained_records(config, graph, records=records)
        report = {
            "d": config.d,
            "q": config.q,
            "edges": sorted(list(e) for e in graph.edges),
            "T": len(records),
            "avoiding": len(kept),
            "records": [_record_dict(r) for r in kept],
        }
        return report, True
    report = drivers.single_edge_constraint_campaign(args.samples, args.seed, d=args.d, q=args.q)
    return report, report["ok"]


def cmd_search(args):
    n = (args.d + 1) * (args.q - 1) + 1
    graph = _graph_for(args.graph, n)
    witness = witness_search(args.q, args.d, graph, args.seed, args.budget)
    report = {
        "q": args.q,
        "d": args.d,
        "graph": args.graph,
        "budget": args.budget,
        "found": witness is not None,
    }
    ok = True
    if witness is not None:
        kept = constrained_records(witness, graph)
        ok = not kept  # a witness must survive exact re-enumeration
        report["witness"] = [_point_strings(p) for p in witness.points]
        report["verified"] = ok
    return report, ok


def cmd_complex(args):
    if args.check == "chessboard":
        report = drivers.chessboard_connectivity_campaign(args.max)
    elif args.check == "lemmas":
        report = drivers.lemma_connectivity_campaign()
    elif args.check == "identities":
        report = drivers.structural_identities_campaign(max_q=args.max)
    else:
        report = drivers.goodness_invariance_campaign()
    report["check"] = args.check
    return report, report["ok"]


def cmd_verify_all(args):
    criteria = [
        ("radon_baseline", lambda: drivers.radon_baseline()),
        ("counting_d1_q3", lambda: drivers.counting_campaign(1, 3, args.samples, args.seed)),
        ("counting_d2_q3", lambda: drivers.counting_campaign(2, 3, args.samples, args.seed)),
        (
            "single_edge_constraints",
            lambda: drivers.single_edge_constraint_campaign(args.samples, args.seed),
        ),
        ("star_witness_search", lambda: drivers.star_witness_campaign(args.budget, args.seed)),
        ("birch_counts", lambda: drivers.birch_campaign(args.samples, args.seed)),
        ("chessboard_connectivity", lambda: drivers.chessboard_connectivity_campaign(6)),
        ("lemma_connectivity", lambda: drivers.lemma_connectivity_campaign()),
        ("structural_identities", lambda: drivers.structural_identities_campaign()),
        ("goodness_invariance", lambda: drivers.goodness_invariance_campaign()),
    ]
    results = []
    ok = True
    for name, run in criteria:
        report = run()
        ok = ok and report["ok"]
        results.append({"criterion": name, "ok": report["ok"]})
    return {"ok": ok, "criteria": results}, ok


def cmd_render(args):
    config = _load_config(args.input)
    records = tverberg_records(config)[: args.records]
    graph = _graph_for(args.graph, len(config.points)) if args.graph else None
    svg = render_svg(config, records=records, graph=graph)
    with open(args.out, "w") as fh:
        fh.write(svg)
    report = {
        "input": args.input,
        "out": args.out,
        "records_drawn": len(records),
        "edges_drawn": len(graph.edges) if graph else 0,
    }
    return report, True


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="tverlab")
    parser.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="candidate partitions, or records of a configuration")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--input", help="configuration file to classify")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("count", help="seeded counting campaign")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("constrain", help="constrained counts, or the single-edge campaign")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", help="configuration file")
    p.add_argument("--graph", help="family spec (star2, k2+path2, ...) or edges:0-1,2-3")
    p.set_defaults(run=cmd_constrain)

    p = sub.add_parser("search", help="witness search for a constraint graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("complex", help="complex-side verification campaigns")
    p.add_argument(
        "--check",
        required=True,
        choices=["chessboard", "lemmas", "identities", "goodness"],
    )
    p.add_argument("--max", type=int, default=6)
    p.set_defaults(run=cmd_complex)

    p = sub.add_parser("verify-all", help="run every acceptance campaign")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.set_defaults(run=cmd_verify_all)

    p = sub.add_parser("render", help="SVG of a planar configuration")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--records", type=int, default=1)
    p.add_argument("--graph")
    p.set_defaults(run=cmd_render)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        body, ok = args.run(args)
    except Degenerate as exc:
        print(json.dumps({"schema": 1, "command": args.command, "error": str(exc)}, indent=2))
        return 3
    except TverlabError as exc:
        parser.exit(2, f"error: {exc}\n")
    report = {"schema": 1, "command": args.command}
    for key in ("d", "q", "samples", "seed", "budget"):
        if hasattr(args, key):
            report[key] = getattr(args, key)
    report.update(body)
    if args.timing:
        report["wall_clock"] = round(time.monotonic() - started, 3)
    print(json.dumps(report, indent=2))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
