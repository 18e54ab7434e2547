"""Command-line surface: invariants, sequence, verify, corpus.

Reports are byte-deterministic for fixed inputs and seed: JSON is emitted
with sorted keys, rationals as p/q strings in lowest terms, and corpora are
enumerated in a fixed order.  Exit codes: 0 all-pass, 1 any failing check,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import harness
from .decomposition import associated_primes, minimal_primes
from .errors import ResourceLimitError
from .formats import format_graph, parse_graph, parse_ideal
from .graphs import Graph, cover_ideal, graph_edge_ideal
from .harness import Caps, FiltrationReport
from .monomials import MonomialIdeal
from .regularity import hochster_betti, is_cohen_macaulay, polarize, regularity
from .symbolic import delta_invariant, waldschmidt_constant
from .vnumber import filtration_ideal, v_number


def _parse_caps(text: str | None) -> Caps:
    if not text:
        return Caps()
    overrides = {}
    for item in text.split(","):
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip().replace("-", "_")
        if key not in Caps.__dataclass_fields__:
            raise SystemExit(f"unknown cap {key!r}")
        overrides[key] = int(value)
    return Caps(**overrides)


def _load_ideal(args) -> MonomialIdeal:
    if args.ideal:
        with open(args.ideal) as fh:
            return parse_ideal(fh.read())
    if args.graph:
        with open(args.graph) as fh:
            graph = parse_graph(fh.read())
        if args.graph_ideal == "edge":
            return graph_edge_ideal(graph)
        return cover_ideal(graph)
    raise SystemExit("one of --ideal or --graph is required")


def _add_input_args(sub) -> None:
    sub.add_argument("--ideal", help="ideal file (ring <n> header)")
    sub.add_argument("--graph", help="graph file (graph <n> header)")
    sub.add_argument(
        "--graph-ideal",
        choices=("cover", "edge"),
        default="cover",
        help="which ideal a --graph input denotes (default: cover)",
    )


INVARIANT_NAMES = (
    "alpha", "maxdeg", "equigenerated", "v", "vlocal", "ass", "min",
    "waldschmidt", "delta", "reg", "betti", "cm",
)


def _cmd_invariants(args) -> int:
    caps = _parse_caps(args.caps)
    ideal = _load_ideal(args)
    if args.k != 1 or args.power != "ordinary":
        ideal = filtration_ideal(ideal, args.k, args.power)
    show = [s.strip() for s in args.show.split(",") if s.strip()]
    out: dict[str, object] = {}
    for name in show:
        if name not in INVARIANT_NAMES:
            raise SystemExit(f"unknown invariant {name!r}; choose from {INVARIANT_NAMES}")
        if name == "alpha":
            out[name] = ideal.alpha()
        elif name == "maxdeg":
            out[name] = ideal.max_gen_degree()
        elif name == "equigenerated":
            out[name] = ideal.is_equigenerated()
        elif name == "v":
            out[name] = v_number(ideal).global_v
        elif name == "vlocal":
            rep = v_number(ideal)
            out[name] = {
                "/".join(f"x{i + 1}" for i in sorted(p)): [vv, str(w)]
                for p, (vv, w) in sorted(rep.per_prime.items(), key=lambda kv: sorted(kv[0]))
            }
        elif name == "ass":
            out[name] = [
                [f"x{i + 1}" for i in sorted(p)]
                for p in sorted(associated_primes(ideal), key=sorted)
            ]
        elif name == "min":
            out[name] = [
                [f"x{i + 1}" for i in sorted(p)]
                for p in sorted(minimal_primes(ideal), key=sorted)
            ]
        elif name == "waldschmidt":
            out[name] = str(waldschmidt_constant(ideal))
        elif name == "delta":
            out[name] = str(delta_invariant(ideal, max_dim=caps.vertex_dim))
        elif name == "reg":
            out[name] = regularity(ideal, max_vars=caps.betti_vars)
        elif name == "betti":
            table = ideal if ideal.is_squarefree() else polarize(ideal)[0]
            out[name] = hochster_betti(table, max_vars=caps.betti_vars).rows()
        elif name == "cm":
            target = ideal if ideal.is_squarefree() else polarize(ideal)[0]
            out[name] = is_cohen_macaulay(target)
    if args.format == "json":
        print(json.dumps(out, sort_keys=True))
    else:
        for name in show:
            value = out[name]
            if name == "betti":
                for i, j, b in value:
                    print(f"{i},{j},{b}")
            elif isinstance(value, dict):
                for key, val in value.items():
                    print(f"{name}[{key}] = {val}")
            else:
                print(f"{name} = {value}" if len(show) > 1 else value)
    return 0


def _cmd_sequence(args) -> int:
    caps = _parse_caps(args.caps)
    ideal = _load_ideal(args)
    show = [s.strip() for s in args.show.split(",") if s.strip()]
    rows = harness.compute_sequence(ideal, args.max_k, args.power, show, caps)
    if args.format == "json":
        print(json.dumps({"schema_version": harness.SCHEMA_VERSION, "sequences": rows}, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout)
        header = ["k"] + [c for c in ("alpha", "v", "reg") if c in show]
        writer.writerow(header)
        for row in rows:
            writer.writerow([row.get(col, "") for col in header])
    return 0


def _worker_check(task):
    kind, payload, max_k, caps_kwargs = task
    caps = Caps(**caps_kwargs)
    graph = Graph(payload[0], payload[1])
    check = (
        harness.check_cover_vs_reg(graph, max_k, caps)
        if kind == "cover"
        else harness.check_cmvwc_equivalence(graph, max_k, caps)
    )
    label = harness._graph_label(graph)
    return FiltrationReport(label, "symbolic-min", checks=[check]).to_dict()


def _cmd_verify(args) -> int:
    caps = _parse_caps(args.caps)
    suites = list(harness.SUITES) if args.suite == "all" else [args.suite]
    reports: list[FiltrationReport] = []
    for suite in suites:
        runner = harness.SUITES.get(suite)
        if runner is None:
            raise SystemExit(f"unknown suite {args.suite!r}")
        if suite in ("cover", "cmvwc") and args.jobs > 1:
            tasks = []
            for n in range(2, args.n_max + 1):
                for g in harness.all_graphs(n, no_isolated=True, caps=caps):
                    tasks.append((suite, (g.n, g.edges), args.max_k, caps.__dict__))
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                dicts = list(pool.map(_worker_check, tasks))
            payload = {"schema_version": harness.SCHEMA_VERSION, "suite": suite, "reports": dicts}
            fails = sum(
                1 for d in dicts for c in d["checks"] if c["status"] == "fail"
            )
            _emit_verify(payload, fails, args)
            if fails:
                return 1
            continue
        if suite in ("cover", "cmvwc"):
            suite_reports = runner(args.n_max, args.max_k, caps)
        else:
            suite_reports = runner(args.max_vars, args.max_k, caps)
        reports.extend(suite_reports)
        payload = {
            "schema_version": harness.SCHEMA_VERSION,
            "suite": suite,
            "reports": [r.to_dict() for r in suite_reports],
        }
        fails = sum(1 for r in suite_reports for c in r.checks if c.status == "fail")
        _emit_verify(payload, fails, args)
        if fails:
            return 1
    return 0


def _emit_verify(payload: dict, fails: int, args) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        total = len(payload["reports"])
        statuses = {}
        for rep in payload["reports"]:
            for check in rep["checks"]:
                statuses[check["status"]] = statuses.get(check["status"], 0) + 1
        print(
            f"suite {payload['suite']}: {total} instances, "
            + ", ".join(f"{k}={v}" for k, v in sorted(statuses.items()))
        )
        if fails:
            for rep in payload["reports"]:
                for check in rep["checks"]:
                    if check["status"] == "fail":
                        print(f"  FAIL {rep['instance']}: {json.dumps(check, sort_keys=True)}")


def _cmd_corpus(args) -> int:
    caps = _parse_caps(args.caps)
    graph = harness.family_graph(args.family, args.n, caps)
    sys.stdout.write(format_graph(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="videal",
        description="Exact invariants of monomial ideals and their power filtrations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="print invariants of an ideal")
    _add_input_args(p_inv)
    p_inv.add_argument("--show", required=True, help="comma list, e.g. v,reg,waldschmidt")
    p_inv.add_argument("--power", choices=("ordinary", "symbolic-min", "symbolic-ass"), default="ordinary")
    p_inv.add_argument("--k", type=int, default=1, help="which filtration member (default 1)")
    p_inv.add_argument("--format", choices=("text", "json"), default="text")
    p_inv.add_argument("--caps", help="cap overrides, e.g. betti_vars=18")
    p_inv.set_defaults(func=_cmd_invariants)

    p_seq = sub.add_parser("sequence", help="per-k invariant table along a filtration")
    _add_input_args(p_seq)
    p_seq.add_argument("--max-k", type=int, required=True)
    p_seq.add_argument("--power", choices=("ordinary", "symbolic-min", "symbolic-ass"), default="symbolic-min")
    p_seq.add_argument("--show", default="alpha,v,reg")
    p_seq.add_argument("--format", choices=("csv", "json"), default="csv")
    p_seq.add_argument("--caps", help="cap overrides")
    p_seq.set_defaults(func=_cmd_sequence)

    p_ver = sub.add_parser("verify", help="run a theorem-check suite over a corpus")
    p_ver.add_argument("--suite", default="all", help="cover|cmvwc|slope|bounds|persistence|criteria|all")
    p_ver.add_argument("--n-max", type=int, default=4, help="graph corpus size limit")
    p_ver.add_argument("--max-vars", type=int, default=3, help="ideal corpus variable limit")
    p_ver.add_argument("--max-k", type=int, default=2)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--caps", help="cap overrides")
    p_ver.set_defaults(func=_cmd_verify)

    p_cor = sub.add_parser("corpus", help="emit a named-family graph file")
    p_cor.add_argument("--family", required=True, choices=harness.FAMILIES)
    p_cor.add_argument("--n", type=int, required=True)
    p_cor.add_argument("--caps", help="cap overrides")
    p_cor.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
