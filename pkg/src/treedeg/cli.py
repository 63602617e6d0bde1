"""Command-line entry point: ``treedeg <subcommand> ...``.

Exit codes: 0 success, 1 negative result under ``--fail-on-negative`` (or a
failed selftest), 2 usage error, 3 internal contradiction in the embedder.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Sequence

from . import graph as gr
from .embedder import Embeddable, decide_and_embed, verdict_to_json
from .errors import InternalContradiction, TreedegError
from .io import from_parent_array, read_graph, to_graph6, to_parent_array
from .numerics import fact1_predicate, is_lin_comb, predict_ramsey
from .oracle import enumerate_graphs, subgraph_embed
from .ramsey import exact_ramsey, verify_theorem_campaign
from .trees import Tree, enumerate_trees, make_tpq, prufer_decode

__all__ = ["main", "run", "parse_tree", "parse_graph"]

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CONTRADICTION = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing helpers

_NAMED = re.compile(r"^([KCP])(\d+(?:,\d+)*)$")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_graph(spec: str) -> gr.Graph:
    """``K5``, ``K3,3``, ``C6``, ``P4``, a graph6 string, or a file."""
    named = _NAMED.match(spec)
    if named and not Path(spec).exists():
        kind, sizes = named.group(1), _ints(named.group(2))
        if kind == "K":
            return gr.complete_graph(sizes[0]) if len(sizes) == 1 else gr.complete_multipartite(sizes)
        if len(sizes) != 1:
            raise UsageError(f"{kind} takes a single size: {spec!r}")
        return (gr.cycle_graph if kind == "C" else gr.path_graph)(sizes[0])
    try:
        return read_graph(spec)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph {spec!r}: {exc}") from None


def parse_tree(spec: str) -> Tree:
    """``tpq:p,q``, ``prufer:a,b,...``, ``parent:n,p1,...``, or any graph spec."""
    try:
        if spec.startswith("tpq:"):
            p, q = _ints(spec[4:])
            return make_tpq(p, q)
        if spec.startswith("prufer:"):
            return prufer_decode(_ints(spec[7:]))
        if spec.startswith("parent:"):
            return Tree(from_parent_array(" ".join(map(str, _ints(spec[7:])))))
        return Tree(parse_graph(spec))
    except UsageError:
        raise
    except (ValueError, TreedegError) as exc:
        raise UsageError(f"cannot read tree {spec!r}: {exc}") from None


def _range(text: str) -> list[int]:
    """``6``, ``5-9`` or ``5,7,9``."""
    if re.fullmatch(r"\d+-\d+", text):
        lo, hi = map(int, text.split("-"))
        return list(range(lo, hi + 1))
    return _ints(text)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TREEDEG_JOBS", "1")))
    except ValueError:
        return 1


class _Output:
    def __init__(self, path: str | None, pretty: bool) -> None:
        self.path = path
        self.pretty = pretty
        self.chunks: list[str] = []

    def json(self, doc: object) -> None:
        self.chunks.append(json.dumps(doc, indent=2 if self.pretty else None, sort_keys=True) + "\n")

    def lines(self, lines: Iterable[str]) -> None:
        self.chunks.extend(line + "\n" for line in lines)

    def flush(self) -> None:
        text = "".join(self.chunks)
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_embed(args, out: _Output, *, witness: bool) -> int:
    t = parse_tree(args.tree)
    g = parse_graph(args.graph)
    verdict = decide_and_embed(t, g)
    doc = verdict_to_json(verdict, witness=witness)
    if doc["status"] == "out_of_scope" and args.fallback_oracle:
        found = subgraph_embed(t.graph, g) if t.n <= g.n else None
        doc["oracle"] = "embeddable" if found is not None else "not_embeddable"
        if found is not None and witness:
            doc["witness"] = list(found.assignment)
    out.json(doc)
    negative = not isinstance(verdict, Embeddable) and doc.get("oracle") != "embeddable"
    return EXIT_NEGATIVE if negative and args.fail_on_negative else EXIT_OK


def _cmd_enumerate_trees(args, out: _Output) -> int:
    trees = enumerate_trees(args.n, args.max_degree)
    if args.format == "parent":
        out.lines(to_parent_array(t.graph).strip() for t in trees)
    else:
        out.lines(to_graph6(t.graph) for t in trees)
    return EXIT_OK


def _cmd_enumerate_graphs(args, out: _Output) -> int:
    out.lines(to_graph6(g) for g in enumerate_graphs(args.n, args.min_degree, args.connected))
    return EXIT_OK


def _cmd_ramsey(args, out: _Output) -> int:
    if args.ramsey_command == "predict":
        pred = predict_ramsey(parse_tree(args.tree), args.m)
        out.json(pred.to_json())
        return EXIT_NEGATIVE if args.fail_on_negative and pred.value is None else EXIT_OK
    if args.ramsey_command == "exact":
        result = exact_ramsey(parse_tree(args.tree), args.m, args.cap, jobs=args.jobs)
        out.json(result.to_json())
        return EXIT_OK
    rows = verify_theorem_campaign(_range(args.n), _range(args.k), exact_max_vertices=args.exact_max, jobs=args.jobs)
    # JSON lines regardless of --pretty
    out.lines(json.dumps(row, sort_keys=True) for row in rows)
    bad = sum(r["status"] == "mismatch" for r in rows)
    return EXIT_NEGATIVE if bad else EXIT_OK


def _theorem_host_report(task: tuple[int, int, int]) -> dict:
    n, N, min_degree = task
    trees = enumerate_trees(n, n - 3)
    report = {"pairs": 0, "mismatches": [], "exceptions": [], "strategies": Counter()}
    for g in enumerate_graphs(N, min_degree, True):
        for t in trees:
            verdict = decide_and_embed(t, g)
            found = subgraph_embed(t.graph, g) is not None
            report["pairs"] += 1
            if isinstance(verdict, Embeddable):
                report["strategies"][verdict.strategy] += 1
            else:
                report["exceptions"].append(
                    {"tree": to_graph6(t.graph), "host": to_graph6(g), "verdict": verdict_to_json(verdict)}
                )
            if isinstance(verdict, Embeddable) != found:
                report["mismatches"].append({"tree": to_graph6(t.graph), "host": to_graph6(g)})
    return report


def _cmd_selftest(args, out: _Output) -> int:
    start = time.perf_counter()
    if args.suite == "fact1":
        bad = [
            [m, n]
            for n in range(5, 41)
            for m in range(1, 301)
            if fact1_predicate(m, n)
            != (is_lin_comb(m + n - 4, (n - 1, n - 2)) and not is_lin_comb(m + n - 3, (n - 1, n - 2)))
        ]
        doc = {"suite": "fact1", "checked": 36 * 300, "mismatches": bad}
    elif args.suite == "enumeration":
        trees = [len(enumerate_trees(n)) for n in range(1, 9)]
        graphs = [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 8)]
        expected = ([1, 1, 1, 2, 3, 6, 11, 23], [1, 2, 4, 11, 34, 156, 1044])
        doc = {
            "suite": "enumeration",
            "tree_counts": trees,
            "graph_counts": graphs,
            "mismatches": [] if (trees, graphs) == expected else ["counts differ from reference"],
        }
    else:
        n = args.n
        tasks = [(n, N, n - 3) for N in range(n, n + args.extra + 1)]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                parts = list(pool.map(_theorem_host_report, tasks))
        else:
            parts = [_theorem_host_report(task) for task in tasks]
        strategies: Counter = Counter()
        for part in parts:
            strategies.update(part["strategies"])
        doc = {
            "suite": "theorem1",
            "n": n,
            "host_sizes": [task[1] for task in tasks],
            "pairs": sum(p["pairs"] for p in parts),
            "exceptions": [e for p in parts for e in p["exceptions"]],
            "strategies": dict(sorted(strategies.items())),
            "mismatches": [x for p in parts for x in p["mismatches"]],
        }
    doc["seconds"] = round(time.perf_counter() - start, 3) if args.timing else None
    doc["passed"] = not doc["mismatches"]
    out.json(doc)
    return EXIT_OK if doc["passed"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default: $TREEDEG_JOBS or 1)")
    common.add_argument("--fail-on-negative", action="store_true", help="exit 1 on a negative domain result")

    parser = _Parser(prog="treedeg", description="Tree embedding under minimum degree n-3 and tree-star Ramsey numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (("embed", "verdict with witness"), ("decide", "verdict without witness")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--tree", required=True, help="tpq:p,q | prufer:... | parent:n,... | graph6 | file")
        p.add_argument("--graph", required=True, help="K5 | K3,3 | C6 | P4 | graph6 | file")
        p.add_argument("--fallback-oracle", action="store_true", help="run the exhaustive oracle when out of scope")

    p = sub.add_parser("enumerate-trees", parents=[common], help="one tree per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--format", choices=("graph6", "parent"), default="graph6")

    p = sub.add_parser("enumerate-graphs", parents=[common], help="graph6 stream, one graph per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--connected", action="store_true")

    p = sub.add_parser("ramsey", help="tree-versus-star Ramsey numbers")
    rsub = p.add_subparsers(dest="ramsey_command", required=True, parser_class=_Parser)
    q = rsub.add_parser("predict", parents=[common])
    q.add_argument("--tree", required=True)
    q.add_argument("--m", type=int, required=True)
    q = rsub.add_parser("exact", parents=[common])
    q.add_argument("--tree", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--cap", type=int, default=12)
    q = rsub.add_parser("campaign", parents=[common])
    q.add_argument("--n", required=True, help="6, 5-9 or 5,7")
    q.add_argument("--k", required=True, help="0, 0-2 or 0,1")
    q.add_argument("--exact-max", type=int, default=11, help="largest K_N searched exactly")

    p = sub.add_parser("selftest", parents=[common], help="built-in verification suites")
    p.add_argument("suite", choices=("theorem1", "fact1", "enumeration"))
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--extra", type=int, default=3, help="hosts on n..n+extra vertices")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = _Output(args.out, getattr(args, "pretty", False))
        if args.command in ("embed", "decide"):
            code = _cmd_embed(args, out, witness=args.command == "embed")
        elif args.command == "enumerate-trees":
            code = _cmd_enumerate_trees(args, out)
        elif args.command == "enumerate-graphs":
            code = _cmd_enumerate_graphs(args, out)
        elif args.command == "ramsey":
            code = _cmd_ramsey(args, out)
        else:
            code = _cmd_selftest(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except TreedegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


def main() -> None:
    sys.exit(run())
