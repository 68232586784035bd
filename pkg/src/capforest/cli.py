"""Command-line front end.

Exit codes (stable contract): ``0`` solution found / inequality holds /
oracles agree / sweep clean; ``1`` no solution exists (a verdict, not an
error); ``2`` bad input; ``3`` internal disagreement between solver and
oracles or a failed sweep (bug indicators).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificates import evaluate_condition, oracle_condition, oracle_forest_search
from .engine import Found, Impossible, SolveVerdict, solve
from .errors import CapforestError, InternalSolverError
from .generators import GenSpec, generate
from .graph import CapacityMap
from .instance_io import (
    Instance,
    emit_instance,
    graph_to_dot,
    parse_capacity_file,
    parse_instance,
    resolve_capacities,
)
from . import sweeps

EXIT_FOUND = 0
EXIT_IMPOSSIBLE = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3


def _load_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"), source=path)


def _load_capacities(args, instance: Instance) -> CapacityMap:
    sidecar = None
    if args.caps:
        sidecar = parse_capacity_file(
            Path(args.caps).read_text(encoding="utf-8"), source=args.caps
        )
    return resolve_capacities(instance, sidecar)


def _verdict_payload(verdict: SolveVerdict) -> dict:
    if isinstance(verdict, Found):
        forest = verdict.forest
        return {
            "exists": True,
            "components": forest.num_components,
            "forest": [[e.u, e.v, e.color] for _, e in forest.member_edges()],
            "color_counts": forest.color_counts(),
        }
    cert = verdict.certificate
    return {
        "exists": False,
        "violating_colors": cert.sorted_colors(),
        "omega": cert.omega_measured,
        "bound": cert.bound,
    }


def _print_verdict(verdict: SolveVerdict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_verdict_payload(verdict), sort_keys=True))
        return
    if isinstance(verdict, Found):
        forest = verdict.forest
        print(f"forest with {forest.num_components} components ({forest.size} edges)")
        for _, e in forest.member_edges():
            print(f"  {e.u} -- {e.v}  [{e.color}]")
        counts = forest.color_counts()
        if counts:
            print("color counts: " + " ".join(f"{c}={counts[c]}" for c in sorted(counts)))
    else:
        cert = verdict.certificate
        names = " ".join(cert.sorted_colors()) or "(none)"
        print("no qualifying forest")
        print(f"violating colors: {names}")
        print(
            f"components without them: {cert.omega_measured} > budget {cert.bound}"
        )


def cmd_solve(args) -> int:
    instance = _load_instance(args.instance)
    caps = _load_capacities(args, instance)
    verdict = solve(instance.graph, caps, args.components)
    if args.dot:
        forest = verdict.forest if isinstance(verdict, Found) else None
        Path(args.dot).write_text(
            graph_to_dot(instance.graph, forest), encoding="utf-8"
        )
    _print_verdict(verdict, args.json)
    return EXIT_FOUND if isinstance(verdict, Found) else EXIT_IMPOSSIBLE


def cmd_certify(args) -> int:
    instance = _load_instance(args.instance)
    caps = _load_capacities(args, instance)
    unknown = [c for c in args.colors if c not in instance.graph.palette]
    if unknown:
        raise CapforestError(f"unknown colors: {' '.join(sorted(unknown))}")
    colors = set(args.colors)
    remaining, budget = evaluate_condition(
        instance.graph, caps, args.components, colors
    )
    names = " ".join(sorted(colors)) or "(none)"
    print(f"colors: {names}")
    print(f"components without them: {remaining}")
    print(f"budget: {budget}")
    if remaining > budget:
        print("violated")
        return EXIT_IMPOSSIBLE
    print("holds")
    return EXIT_FOUND


def cmd_oracle(args) -> int:
    instance = _load_instance(args.instance)
    caps = _load_capacities(args, instance)
    g, m = instance.graph, args.components
    verdict = solve(g, caps, m)
    cert = oracle_condition(g, caps, m, max_palette=args.max_palette)
    forest = oracle_forest_search(g, caps, m, max_edges=args.max_edges)

    solver_found = isinstance(verdict, Found)
    print(f"solver: {'exists' if solver_found else 'impossible'}")
    if cert is None:
        print("condition oracle: no violating color set")
    else:
        print(f"condition oracle: violating colors {' '.join(cert.sorted_colors()) or '(none)'}")
    print(f"search oracle: {'forest found' if forest is not None else 'no forest'}")
    if solver_found == (cert is None) == (forest is not None):
        print(f"AGREE exists={str(solver_found).lower()}")
        return EXIT_FOUND
    print("DISAGREE")
    return EXIT_DISAGREE


def cmd_gen(args) -> int:
    model = args.model.replace("-", "_")
    if model == "complete_factorized":
        coloring = None
        palette_size = None
        k = None
    else:
        coloring = "k_bounded" if args.k is not None else "uniform"
        palette_size = args.colors
        k = args.k
    spec = GenSpec(
        seed=args.seed,
        n=args.n,
        model=model,
        p=args.p,
        coloring=coloring,
        palette_size=palette_size,
        k=k,
    )
    text = emit_instance(generate(spec))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_FOUND


def cmd_sweep(args) -> int:
    summary = sweeps.run_all(args.count, args.seed, max_n=args.max_n)
    for report in summary.reports:
        total = report.passed + report.failed
        print(f"{report.name}: {report.passed}/{total} passed")
        if report.first_failing_key is not None:
            print(f"  first failure: {report.first_failing_key}")
    if summary.ok:
        print("all laws hold")
        return EXIT_FOUND
    print("LAW VIOLATION")
    return EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capforest",
        description=(
            "Decide, construct, and certify spanning forests with exactly m "
            "components in edge-colored graphs, under per-color edge budgets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p):
        p.add_argument("--caps", help="capacity sidecar file (overrides inline)")

    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("instance", help="instance file")
    p_solve.add_argument("-m", "--components", type=int, required=True)
    add_caps(p_solve)
    p_solve.add_argument("--json", action="store_true", help="machine-readable output")
    p_solve.add_argument("--dot", help="write the graph (plus forest) as DOT")
    p_solve.set_defaults(func=cmd_solve)

    p_cert = sub.add_parser(
        "certify", help="evaluate the component/budget inequality for one color set"
    )
    p_cert.add_argument("instance")
    p_cert.add_argument("-m", "--components", type=int, required=True)
    add_caps(p_cert)
    p_cert.add_argument(
        "--colors", nargs="*", default=[], help="color set to test (may be empty)"
    )
    p_cert.set_defaults(func=cmd_certify)

    p_oracle = sub.add_parser(
        "oracle", help="cross-check the solver against both exhaustive oracles"
    )
    p_oracle.add_argument("instance")
    p_oracle.add_argument("-m", "--components", type=int, required=True)
    add_caps(p_oracle)
    p_oracle.add_argument("--max-palette", type=int, default=16)
    p_oracle.add_argument("--max-edges", type=int, default=20)
    p_oracle.set_defaults(func=cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a seeded instance file")
    p_gen.add_argument(
        "--model",
        choices=["gnp", "complete", "complete-factorized"],
        default="gnp",
    )
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, help="gnp edge probability")
    p_gen.add_argument("--colors", type=int, default=1, help="palette size")
    p_gen.add_argument("--k", type=int, help="max edges per color (shuffled pool)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="output file (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_sweep = sub.add_parser("sweep", help="run the randomized law sweeps")
    p_sweep.add_argument("--count", type=int, default=100, help="instances per law")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--max-n", type=int, default=7)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalSolverError:
        raise
    except (CapforestError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
