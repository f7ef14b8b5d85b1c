"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
Graphs are read one per line (graph6, or digraph6 with a leading ``&``) from
the positional arguments: an argument naming an existing file is read as a
file, anything else is taken as an inline graph.  With no arguments, stdin
is read.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .checks import SUITE_NAMES, run_suite
from .enumeration import (
    EnumerationCapError,
    acyclic_orientations,
    orientations,
    po_tac_states,
    strongly_connected_orientations,
)
from .formats import FormatError, emit_any, parse_any
from .graphs import GraphError, SimpleGraph, graph_from_key, render
from .hopf import GraphSum, antipode_recursive, coproduct_Delta, coproduct_contraction
from .invariants import chromatic_polynomial, fk_polynomial, rank_generating_polynomial, tutte_polynomial
from .poly import UniPoly, format_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INVARIANTS = {
    "chromatic": chromatic_polynomial,
    "tutte": tutte_polynomial,
    "fk": fk_polynomial,
    "rank-gen": rank_generating_polynomial,
}


class InputError(Exception):
    pass


def _coeff(c: Fraction):
    """Integers as JSON ints, other rationals as ``"p/q"`` strings."""
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def _read_lines(sources: list) -> list:
    """``(line number, text)`` over all sources, blank lines skipped."""
    if not sources:
        chunks = [sys.stdin.read()]
    else:
        chunks = []
        for s in sources:
            if os.path.isfile(s):
                with open(s, encoding="ascii", errors="replace") as fh:
                    chunks.append(fh.read())
            else:
                chunks.append(s)
    out = []
    lineno = 0
    for chunk in chunks:
        for line in chunk.splitlines():
            lineno += 1
            text = line.strip()
            if text:
                out.append((lineno, text))
    return out


def _parse_graphs(sources: list, simple_only: bool = False) -> list:
    graphs = []
    for lineno, text in _read_lines(sources):
        try:
            g = parse_any(text)
        except (FormatError, GraphError, ValueError) as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
        if simple_only and not isinstance(g, SimpleGraph):
            raise InputError(f"line {lineno}: expected an undirected graph (graph6)")
        graphs.append((text, g))
    return graphs


def _terms(p) -> list:
    if isinstance(p, UniPoly):
        items = [((d, 0), c) for d, c in p.coeffs.items()]
    else:
        items = list(p.coeffs.items())
    return [{"dx": dx, "dy": dy, "coeff": _coeff(c)} for (dx, dy), c in sorted(items)]


# ---------------------------------------------------------------------------
# subcommands


def cmd_invariant(args, out) -> int:
    graphs = _parse_graphs(args.graphs, simple_only=True)
    fn = INVARIANTS[args.which]
    writer = None
    if args.format == "csv" and graphs:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["graph", "invariant", "dx", "dy", "coeff"])
    for text, g in graphs:
        p = fn(g)
        if args.format == "json":
            out.write(json.dumps({"graph": text, "invariant": args.which, "terms": _terms(p)}) + "\n")
        elif args.format == "csv":
            for t in _terms(p):
                writer.writerow([text, args.which, t["dx"], t["dy"], t["coeff"]])
        else:
            names = ("X",) if isinstance(p, UniPoly) else ("X", "Y")
            out.write(f"{text}\t{format_poly(p, names)}\n")
    return EXIT_OK


def _tensor_rows(t) -> list:
    rows = []
    for (k1, k2), c in sorted(t.terms.items()):
        a, b = graph_from_key(k1), graph_from_key(k2)
        rows.append((emit_any(a), emit_any(b), render(a), render(b), c))
    return rows


def cmd_coproduct(args, out) -> int:
    graphs = _parse_graphs(args.graphs)
    fn = coproduct_Delta if args.which == "bipartition" else coproduct_contraction
    for text, g in graphs:
        rows = _tensor_rows(fn(GraphSum.of(g)))
        if args.format == "json":
            terms = [
                {"left": l6, "right": r6, "left_graph": lr, "right_graph": rr, "coeff": _coeff(c)}
                for l6, r6, lr, rr, c in rows
            ]
            out.write(json.dumps({"graph": text, "coproduct": args.which, "terms": terms}) + "\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            for l6, r6, lr, rr, c in rows:
                w.writerow([text, args.which, l6, r6, _coeff(c)])
        else:
            out.write(f"# {text} ({render(g)})\n")
            for l6, r6, lr, rr, c in rows:
                out.write(f"{c}\t[{lr}] (x) [{rr}]\t{l6} {r6}\n")
    return EXIT_OK


def cmd_antipode(args, out) -> int:
    graphs = _parse_graphs(args.graphs)
    for text, g in graphs:
        s = antipode_recursive(g)
        rows = [(emit_any(graph_from_key(k)), render(graph_from_key(k)), c) for k, c in sorted(s.terms.items())]
        if args.format == "json":
            terms = [{"graph6": g6, "graph": r, "coeff": _coeff(c)} for g6, r, c in rows]
            out.write(json.dumps({"graph": text, "antipode": terms}) + "\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            for g6, r, c in rows:
                w.writerow([text, g6, _coeff(c)])
        else:
            out.write(f"# {text} ({render(g)})\n")
            for g6, r, c in rows:
                out.write(f"{c}\t[{r}]\t{g6}\n")
    return EXIT_OK


def cmd_orientations(args, out) -> int:
    graphs = _parse_graphs(args.graphs, simple_only=True)
    for text, g in graphs:
        if args.which == "po-tac":
            try:
                count = sum(1 for _ in po_tac_states(g))
            except EnumerationCapError as exc:
                raise InputError(str(exc)) from exc
        else:
            gen = {"all": orientations, "acyclic": acyclic_orientations, "strong": strongly_connected_orientations}
            count = sum(1 for _ in gen[args.which](g))
        if args.format == "json":
            out.write(json.dumps({"graph": text, "orientations": args.which, "count": count}) + "\n")
        elif args.format == "csv":
            csv.writer(out, lineterminator="\n").writerow([text, args.which, count])
        else:
            out.write(f"{text}\t{count}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        report = run_suite(args.suite, args.max_vertices, args.max_edges, args.jobs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    else:
        for check, c in report.summary().items():
            status = "FAIL" if c["fail"] else "PASS"
            out.write(f"{status}\t{check}\tpass={c['pass']} fail={c['fail']} skipped={c['skipped']}\n")
        for r in report.failures:
            out.write(f"COUNTEREXAMPLE\t{r.check}\t{r.graph}\t{r.detail}\n")
        out.write("ALL PASS\n" if report.ok else f"{len(report.failures)} FAILURE(S)\n")
    # timing goes to stderr so stdout stays byte-identical between runs
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphbialg", description="Double bialgebra of graphs: invariants, coproducts, checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json", "csv")):
        sp.add_argument("graphs", nargs="*", help="graph6/digraph6 strings or files (default: stdin)")
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("invariant", help="chromatic, Tutte, FK or rank-generating polynomial")
    sp.add_argument("--which", choices=sorted(INVARIANTS), default="tutte")
    common(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("coproduct", help="bipartition (Delta) or contraction (delta) coproduct")
    sp.add_argument("--which", choices=("bipartition", "contraction"), default="bipartition")
    common(sp)
    sp.set_defaults(func=cmd_coproduct)

    sp = sub.add_parser("antipode", help="antipode of Delta")
    common(sp)
    sp.set_defaults(func=cmd_antipode)

    sp = sub.add_parser("orientations", help="count orientations of a graph")
    sp.add_argument("--which", choices=("all", "acyclic", "strong", "po-tac"), default="acyclic")
    common(sp)
    sp.set_defaults(func=cmd_orientations)

    sp = sub.add_parser("verify", help="run an identity suite over all small graphs")
    sp.add_argument("--suite", choices=SUITE_NAMES, default="all")
    sp.add_argument("--max-vertices", type=int, default=4)
    sp.add_argument("--max-edges", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
