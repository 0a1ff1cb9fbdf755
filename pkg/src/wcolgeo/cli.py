"""Command-line front end: ``wcolgeo gen|colnum|reach|bounds|verify|export-dot``.

Exit codes: 0 success, 1 a verification failed, 2 usage, input or budget error.
The environment variable ``WCOL_BUDGET`` overrides the vertex budgets of the
generators.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import bounds, constructions, verify
from .coloring import greedy_coloring
from .exact import BudgetExhausted, degeneracy_ordering, scol_exact, wcol_exact
from .geometry import BudgetExceeded, GeometryError, Representation, is_m_shrinking, thinness
from .graph import Graph, Ordering, intersection_graph, sizewise_order
from .reach import decr, reach_sizes, sreach, wreach

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _budget(default: int) -> int:
    raw = os.environ.get("WCOL_BUDGET")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"WCOL_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("WCOL_BUDGET must be positive")
    return value


def _int_list(text: str) -> list[int]:
    """``"1,3,5-7"`` -> [1, 3, 5, 6, 7]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return out


# --- input handling ------------------------------------------------------------------


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def load_input(path: str) -> tuple[Graph, Optional[Representation]]:
    """A representation, scaffold or plain graph file, as a graph plus the representation if any."""
    data = _read_json(path)
    if "objects" in data:
        rep = Representation.from_dict(data)
        return intersection_graph(rep), rep
    if "edges" in data:
        return Graph.from_dict(data), None
    raise UsageError(f"{path}: neither a representation nor a graph")


def resolve_order(g: Graph, rep: Optional[Representation], spec: str) -> Ordering:
    if spec == "sizewise":
        if rep is None:
            raise UsageError("the sizewise ordering needs a representation input")
        return sizewise_order(rep)
    if spec == "identity":
        return Ordering.identity(g.n)
    if spec == "degeneracy":
        return degeneracy_ordering(g)[1]
    data = _read_json(spec)
    if isinstance(data, dict):
        data = data.get("ordering")
    if not isinstance(data, list) or len(data) != g.n:
        raise UsageError(f"{spec}: expected a list of {g.n} vertex labels, smallest first")
    return Ordering.from_labels(g, data)


# --- gen -------------------------------------------------------------------------------


def _summary(rep: Representation, m: Optional[int]) -> str:
    parts = [f"n={len(rep)}", f"d={rep.dimension}"]
    if rep.all_boxes():
        try:
            parts.append(f"thinness={thinness(rep, 10**6)}")
        except BudgetExceeded:
            parts.append(f"thinness<={rep.declared_thinness} (declared)")
    if m is not None:
        seq = sizewise_order(rep).sequence
        sized = Representation(tuple(rep.objects[v] for v in seq), tuple(rep.labels[v] for v in seq))
        parts.append(f"{m}-shrinking={is_m_shrinking(sized, m)}")
    return " ".join(parts)


def cmd_gen(args) -> int:
    if args.family == "fprime":
        m = args.m if args.m is not None else 2 ** (args.k + 1) - 1
        rep = constructions.gen_fprime(args.k, m)
        _write(args.output, rep.to_json() + "\n")
        print(f"fprime k={args.k} " + _summary(rep, m), file=sys.stderr if args.output in (None, "-") else sys.stdout)
    elif args.family == "hprime":
        if args.t is None:
            raise UsageError("gen hprime needs --t")
        m = args.m if args.m is not None else math.comb(args.k + args.t, args.t)
        rep = constructions.gen_hprime(args.k, args.t, m)
        _write(args.output, rep.to_json() + "\n")
        print(f"hprime k={args.k} t={args.t} " + _summary(rep, m),
              file=sys.stderr if args.output in (None, "-") else sys.stdout)
    elif args.family == "scaffold":
        if args.input is None or args.m is None:
            raise UsageError("gen scaffold needs --input and --m")
        g, rep = load_input(args.input)
        order = resolve_order(g, rep, args.order or ("sizewise" if rep is not None else "identity"))
        res = constructions.scaffold_graph(g, order, args.m, _budget(constructions.GRAPH_VERTEX_BUDGET))
        _write(args.output, res.to_json() + "\n")
        line = f"scaffold n={res.graph.n} edges={res.graph.m} m={args.m} levels={g.n}"
        if args.boxes:
            if rep is None:
                raise UsageError("--boxes needs a representation input")
            boxes = constructions.scaffold_boxes(rep, args.m, _budget(constructions.BOX_VERTEX_BUDGET))
            Path(args.boxes).write_text(boxes.to_json() + "\n", encoding="utf-8")
            line += f"; boxes d={boxes.dimension} written to {args.boxes}"
        print(line, file=sys.stderr if args.output in (None, "-") else sys.stdout)
    elif args.family == "lift":
        if args.input is None:
            raise UsageError("gen lift needs --input")
        g, rep = load_input(args.input)
        if rep is None:
            raise UsageError("gen lift needs a representation input")
        if args.coloring:
            coloring = _read_json(args.coloring)
            if isinstance(coloring, dict):
                coloring = [coloring[lab] for lab in rep.labels]
            coloring = [int(c) for c in coloring]
        else:
            coloring = greedy_coloring(g, degeneracy_ordering(g)[1].sequence)
        lifted = constructions.touching_lift(rep, coloring, args.bits)
        _write(args.output, lifted.to_json() + "\n")
        print(f"lift colours={max(coloring) + 1} " + _summary(lifted, None),
              file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return EXIT_OK


# --- colnum / reach / export-dot ------------------------------------------------------


def cmd_colnum(args) -> int:
    g, rep = load_input(args.input)
    if args.order == "exhaustive":
        if args.kind == "decr":
            raise UsageError("exhaustive search is for weak or strong only")
        fn = wcol_exact if args.kind == "weak" else scol_exact
        res = fn(g, args.k, args.budget)
        print(res.value)
        if args.per_vertex:
            _print_sizes(g, reach_sizes(g, res.ordering, args.k, args.kind))
        return EXIT_OK
    order = resolve_order(g, rep, args.order)
    sizes = reach_sizes(g, order, args.k, args.kind)
    print(max(sizes) if sizes else 0)
    if args.per_vertex:
        _print_sizes(g, sizes)
    return EXIT_OK


def _print_sizes(g: Graph, sizes: Sequence[int]) -> None:
    for v in range(g.n):
        print(f"{g.labels[v]}\t{sizes[v]}")


def cmd_reach(args) -> int:
    g, rep = load_input(args.input)
    order = resolve_order(g, rep, args.order)
    fn = {"weak": wreach, "strong": sreach, "decr": decr}[args.kind]
    if args.vertex is not None:
        try:
            targets = [g.labels.index(args.vertex)]
        except ValueError:
            raise UsageError(f"no vertex labelled {args.vertex!r}") from None
    else:
        targets = range(g.n)
    for v in targets:
        found = sorted(fn(g, order, args.k, v), key=lambda u: order.position[u])
        print(f"{g.labels[v]}\t{len(found)}\t" + " ".join(g.labels[u] for u in found))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g, rep = load_input(args.input)
    order = resolve_order(g, rep, args.order) if args.order else None
    _write(args.output, g.to_dot(order))
    return EXIT_OK


# --- bounds ------------------------------------------------------------------------------


def cmd_bounds(args) -> int:
    rows: list[dict] = []
    if args.family:
        kind = {"F": "boxes3d", "H": "thin_squares"}.get(args.family, args.family)
        for k in args.k:
            for t in (args.t if kind == "thin_squares" else [None]):
                for d in (args.d if kind == "hypercubes" else [None]):
                    rows.append({"family": args.family, "k": k, "t": "" if t is None else t,
                                 "d": "" if d is None else d, "radius": 2 * k,
                                 "wcol_lower": str(bounds.lb_value(kind, k, t, d))})
    else:
        for t in args.t:
            for d in args.d:
                case = bounds.BoundCase(args.case, t, d, Fraction(args.b))
                for k in args.k:
                    s = [bounds.scol_upper(case, i) for i in range(1, k + 1)]
                    detail = bounds.thm_weak_upper_detail(case, k, args.k0)
                    rows.append({"case": args.case, "t": t, "d": d, "b": str(case.b), "k": k,
                                 "scol_upper": str(s[-1]),
                                 "wcol_recurrence_upper": str(bounds.wcol_recurrence_upper(s)),
                                 "wcol_upper": str(detail.value), "caveat": detail.caveat or ""})
    if args.format == "json":
        text = json.dumps(rows, indent=1) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    _write(args.output, text)
    return EXIT_OK


# --- verify -------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    fn = {"lemma1": verify.suite_lemma1, "obs2": verify.suite_obs2, "ky": verify.suite_ky,
          "pw": verify.suite_pw, "propP": verify.suite_propP, "lb": verify.suite_lb}[args.suite]
    accepted = set(inspect.signature(fn).parameters)
    given = {name: getattr(args, name) for name in
             ("case", "t", "d", "k", "b", "objects", "n", "w", "kmax", "tmax", "p_max", "family",
              "samples", "seed", "threads", "max_objects")
             if getattr(args, name, None) is not None}
    ignored = sorted(set(given) - accepted - {"seed"})
    if ignored:
        raise UsageError(f"suite {args.suite} does not take {', '.join('--' + x for x in ignored)}")
    if "b" in given:
        given["b"] = Fraction(given["b"])
    report = fn(**{k: v for k, v in given.items() if k in accepted})
    text = json.dumps(report.to_dict(), indent=1) if args.format == "json" else report.to_text()
    _write(args.output, text + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wcolgeo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family, scaffolding or lift")
    g.add_argument("family", choices=["fprime", "hprime", "scaffold", "lift"])
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--t", type=int)
    g.add_argument("--m", type=int, help="shrinking factor / tree arity")
    g.add_argument("--input", help="representation or graph JSON (scaffold, lift)")
    g.add_argument("--order", help="sizewise, identity, degeneracy or a JSON file of labels")
    g.add_argument("--boxes", help="scaffold: also write the box representation here")
    g.add_argument("--coloring", help="lift: JSON list (or label map) of colours")
    g.add_argument("--bits", type=int, help="lift: number of extra dimensions")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("colnum", help="weak/strong coloring number of an ordering")
    c.add_argument("input")
    c.add_argument("--order", default="sizewise",
                   help="sizewise, identity, degeneracy, exhaustive or a JSON file of labels")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--kind", choices=["weak", "strong", "decr"], default="weak")
    c.add_argument("--per-vertex", action="store_true")
    c.add_argument("--budget", type=int, default=2_000_000, help="search nodes for --order exhaustive")
    c.set_defaults(func=cmd_colnum)

    r = sub.add_parser("reach", help="reach sets of one or all vertices")
    r.add_argument("input")
    r.add_argument("--order", default="sizewise")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--kind", choices=["weak", "strong", "decr"], default="weak")
    r.add_argument("--vertex")
    r.set_defaults(func=cmd_reach)

    b = sub.add_parser("bounds", help="tables of the closed-form bounds")
    b.add_argument("--case", choices=["a", "b", "c"], default="a")
    b.add_argument("--family", choices=["F", "H", "boxes3d", "thin_squares", "hypercubes"],
                   help="lower-bound table instead of upper bounds")
    b.add_argument("--t", type=_int_list, default=[1])
    b.add_argument("--d", type=_int_list, default=[2])
    b.add_argument("--k", type=_int_list, default=[1, 2, 3, 4])
    b.add_argument("--b", default="1")
    b.add_argument("--k0", type=int)
    b.add_argument("--format", choices=["csv", "json"], default="csv")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(verify.SUITES))
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int)
    v.add_argument("--case", choices=["a", "b", "c"])
    v.add_argument("--objects", choices=["unit", "cubes", "boxes", "balls"])
    v.add_argument("--family", choices=["F", "H"])
    v.add_argument("--b")
    for name in ("t", "d", "k", "n", "w", "kmax", "tmax", "max-objects", "p-max"):
        v.add_argument(f"--{name}", type=int, dest=name.replace("-", "_"))
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export-dot", help="write a graph in DOT format")
    e.add_argument("input")
    e.add_argument("--order", help="annotate vertices with their position")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GeometryError, ValueError, OSError, BudgetExceeded, BudgetExhausted,
            constructions.ConstructionBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
