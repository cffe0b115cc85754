"""Command-line interface: describe, verify, export, sweep, selftest.

Graphs render in an ASCII notation: `(+)` joins components, `kx` is a
multiplicity prefix, `Cyc(m,T)` is an m-cycle with tree T at every cycle
vertex, `{T}` abbreviates Cyc(1,T), `T(a,b,...)` is the layered tree of
a sequence, and `<...>` encloses a forest under a fresh root.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable

from .fgraph import (
    Component,
    FunctionalGraph,
    graph_from_summary,
    summary,
    to_dot,
)
from .groups import (
    CyclicGroup,
    DihedralGroup,
    FiniteGroup,
    GroupSpecError,
    PGLGroup,
    QuaternionGroup,
    UnitsGroup,
    parse_group,
)
from .oracle import brute_force_graph, verify
from .selftest import run_selftest, selftest_ok
from .structural import structural_graph
from .tree import render_tree


def render_component(comp: Component, mult: int) -> str:
    m = comp.cycle_length
    if comp.is_regular():
        tr = comp.cycle_trees[0]
        if tr.node_count == 1:
            body = f"Cyc({m})"
        elif m == 1:
            body = "{" + render_tree(tr) + "}"
        else:
            body = f"Cyc({m},{render_tree(tr)})"
    else:
        inner = ", ".join(render_tree(t) for t in comp.canonical_trees())
        body = f"Cyc({m}; {inner})"
    return f"{mult}x{body}" if mult > 1 else body


def render_graph(g: FunctionalGraph) -> str:
    """One-line ASCII form of the whole graph, in canonical component order."""
    if not g.parts:
        return "(empty)"
    return " (+) ".join(render_component(c, k) for c, k in g.parts)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve(spec: str) -> FiniteGroup:
    try:
        return parse_group(spec)
    except GroupSpecError as exc:
        raise SystemExit(f"error: {exc}")
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _describe_payload(g: FiniteGroup, t: int) -> tuple[FunctionalGraph, dict]:
    res = structural_graph(g, t)
    if res is None:
        print(
            f"note: no structural theorem applies to {g.name}; "
            "falling back to brute-force enumeration",
            file=sys.stderr,
        )
        graph = brute_force_graph(g, t)
        payload = {
            "group": g.name,
            "order": g.order,
            "t": t,
            "provenance": "brute-force",
            **summary(graph),
        }
        return graph, payload
    payload = {
        "group": g.name,
        "order": g.order,
        "t": t,
        "provenance": res.method,
        "central_expression": res.central_expression,
        **summary(res.graph),
    }
    if res.flower_type is not None:
        payload["flower_type"] = str(res.flower_type)
    return res.graph, payload


def _cmd_describe(args: argparse.Namespace) -> int:
    g = _resolve(args.group)
    graph, payload = _describe_payload(g, args.t)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "dot":
        _emit(to_dot(graph, name="powergraph"), args.out)
    else:
        lines = [
            f"group: {g.name} (order {g.order})",
            f"t: {args.t}",
            f"method: {payload['provenance']}",
        ]
        if "flower_type" in payload:
            lines.append(f"flower type: {payload['flower_type']}")
        lines.append(f"graph: {render_graph(graph)}")
        if "central_expression" in payload:
            lines.append(f"central tree: {payload['central_expression']}")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    g = _resolve(args.group)
    graph, payload = _describe_payload(g, args.t)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(to_dot(graph, name="powergraph"), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _resolve(args.group)
    rep = verify(g, args.t)
    brute = graph_from_summary(rep.brute_summary)
    structural = (
        graph_from_summary(rep.structural_summary)
        if rep.structural_summary is not None
        else None
    )
    if args.dot:
        base = str(Path(args.dot))
        Path(base + ".brute.dot").write_text(to_dot(brute, name="brute"))
        if structural is not None:
            Path(base + ".structural.dot").write_text(
                to_dot(structural, name="structural")
            )
    if args.format == "json":
        _emit(json.dumps(rep.to_dict(), indent=2), args.out)
    else:
        lines = [
            f"group: {rep.group} (order {rep.order})",
            f"t: {rep.t}",
            f"verdict: {rep.verdict}",
            f"method: {rep.method or 'none (no structural theorem applies)'}",
        ]
        if rep.flower_type:
            lines.append(f"flower type: {rep.flower_type}")
        if structural is not None:
            lines.append(f"structural: {render_graph(structural)}")
        lines.append(f"brute force: {render_graph(brute)}")
        if rep.central_expression:
            lines.append(f"central tree: {rep.central_expression}")
        lines.append(
            f"components: {rep.component_count}   periodic points: "
            f"{rep.periodic_count}   distinct trees: {rep.distinct_trees}"
        )
        lines.append(
            f"times: structural {1000 * rep.structural_seconds:.2f} ms, "
            f"brute {1000 * rep.brute_seconds:.2f} ms"
        )
        _emit("\n".join(lines), args.out)
    if rep.verdict == "match":
        return 0
    if rep.verdict == "no-theorem":
        return 3
    return 1


_SWEEP_FAMILIES = {
    "cyclic": ("n", CyclicGroup),
    "units": ("n", UnitsGroup),
    "dihedral": ("n", DihedralGroup),
    "quaternion": ("n", QuaternionGroup),
    "pgl2": ("q", PGLGroup),
}


def _parse_values(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, _, hi = part.partition("..")
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"no values in {text!r}")
    return out


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.family not in _SWEEP_FAMILIES:
        raise SystemExit(
            f"error: sweepable families are {', '.join(sorted(_SWEEP_FAMILIES))} "
            f"(got {args.family!r}); multi-parameter families are not sweepable"
        )
    param, factory = _SWEEP_FAMILIES[args.family]
    name, eq, values = args.range.partition("=")
    if not eq:
        raise SystemExit("error: --range must look like n=3..10 or q=3,4,5")
    if name.strip() != param:
        raise SystemExit(
            f"error: family {args.family!r} is parameterized by {param!r}, "
            f"not {name.strip()!r}"
        )
    try:
        param_values = _parse_values(values)
        t_values = _parse_values(args.t)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    rows = []
    for v in param_values:
        try:
            g = factory(v)
        except ValueError as exc:
            raise SystemExit(f"error: {args.family} {param}={v}: {exc}")
        for t in t_values:
            rep = verify(g, t)
            rows.append(
                {
                    "group": rep.group,
                    "order": rep.order,
                    "t": rep.t,
                    "flower_type": rep.flower_type or "-",
                    "components": rep.component_count,
                    "distinct_trees": rep.distinct_trees,
                    "verdict": rep.verdict,
                    "method": rep.method or "-",
                }
            )
    bad = sum(r["verdict"] != "match" for r in rows)
    champion = max(rows, key=lambda r: r["distinct_trees"])
    if args.format == "json":
        payload = {
            "rows": rows,
            "mismatches": bad,
            "max_distinct_trees": {
                "count": champion["distinct_trees"],
                "group": champion["group"],
                "t": champion["t"],
            },
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        header = f"{'group':<24} {'order':>6} {'t':>3} {'type':<20} {'comps':>6} {'trees':>6} verdict"
        lines = [header, "-" * len(header)]
        for r in rows:
            lines.append(
                f"{r['group']:<24} {r['order']:>6} {r['t']:>3} "
                f"{r['flower_type']:<20} {r['components']:>6} "
                f"{r['distinct_trees']:>6} {r['verdict']}"
            )
        lines.append(
            f"{len(rows)} rows, {bad} mismatches; max distinct trees: "
            f"{champion['distinct_trees']} ({champion['group']} at t={champion['t']})"
        )
        _emit("\n".join(lines), args.out)
    return 0 if bad == 0 else 1


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(sys.stdout)
    ok = selftest_ok(results)
    print("selftest:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def _add_common(p: argparse.ArgumentParser, formats: Iterable[str]) -> None:
    p.add_argument("--group", required=True, help="group spec, e.g. quaternion:24")
    p.add_argument("--t", type=int, required=True, help="exponent of the power map (>= 1)")
    fmts = list(formats)
    p.add_argument("--format", choices=fmts, default=fmts[0], help="output format")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powergraph",
        description="Functional graphs of power maps g -> g^t on finite groups: "
        "compute by structure theorems, verify by enumeration.",
        epilog="Group specs: cyclic:12, abelian:6x12, units:91, dihedral:12, "
        "quaternion:24, semidirect:n=65,m=4,s=8, pgl2:5.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="print the structural graph of one power map")
    _add_common(p, ("text", "json", "dot"))
    p.set_defaults(func=_cmd_describe)

    p = sub.add_parser("verify", help="compare the structural graph with brute force")
    _add_common(p, ("text", "json"))
    p.add_argument(
        "--dot",
        metavar="PREFIX",
        help="also write PREFIX.structural.dot and PREFIX.brute.dot",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write the graph as DOT or JSON")
    _add_common(p, ("dot", "json"))
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("sweep", help="verify a family over parameter and exponent ranges")
    p.add_argument("--family", required=True, help="cyclic | units | dihedral | quaternion | pgl2")
    p.add_argument("--range", required=True, help="parameter range, e.g. n=3..10 or q=3,4,5")
    p.add_argument("--t", required=True, help="exponent range, e.g. 2..6 or 2,3,5")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "t") and isinstance(args.t, int) and args.t < 1:
        raise SystemExit("error: --t must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
