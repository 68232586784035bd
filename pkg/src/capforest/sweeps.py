"""Randomized law sweeps shared by the CLI and the acceptance tests.

Three laws are checked, each on its own stream of seeded instances:

* oracle agreement: the solver, the exhaustive subset oracle, and the
  backtracking forest search must reach the same verdict for every target
  component count;
* density guarantee: whenever the density report says a forest is
  guaranteed, the solver must find one;
* bounded complete: complete graphs on n vertices whose colors each appear
  on at most n/2 edges always admit a spanning tree with all-distinct
  colors.

Failures carry the instance's stream key (``"<seed>:<law>:<index>"``) so
the exact case can be replayed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import complete_graph_threshold, density_sufficient
from .certificates import oracle_condition, oracle_forest_search
from .engine import Found, solve
from .errors import InternalSolverError
from .generators import GenSpec, generate
from .graph import CapacityMap, ColoredGraph, color_census


@dataclass
class LawReport:
    name: str
    passed: int = 0
    failed: int = 0
    first_failing_key: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, key: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failing_key is None:
                self.first_failing_key = key


@dataclass
class SweepSummary:
    reports: list[LawReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


def _instance_rng(seed: int, law: str, index: int) -> tuple[random.Random, str]:
    key = f"{seed}:{law}:{index}"
    return random.Random(key), key


def sample_solver_instance(
    rng: random.Random,
    *,
    max_n: int = 7,
    max_edges: int = 14,
    max_palette: int = 5,
    max_cap: int = 3,
) -> tuple[ColoredGraph, CapacityMap]:
    """Random small instance: graph plus a random capacity map over its palette."""
    n = rng.randint(1, max_n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    count = rng.randint(0, min(max_edges, len(pairs)))
    palette = [f"c{j}" for j in range(rng.randint(1, max_palette))]
    edges = [(u, v, palette[rng.randrange(len(palette))]) for u, v in sorted(pairs[:count])]
    g = ColoredGraph(n, tuple(edges), palette=frozenset(palette))
    caps = CapacityMap({c: rng.randint(0, max_cap) for c in palette})
    return g, caps


def oracle_agreement_holds(g, caps, components, solver=solve) -> bool:
    """Solver vs. both exhaustive oracles, one target component count."""
    verdict = solver(g, caps, components)
    cert = oracle_condition(g, caps, components)
    forest = oracle_forest_search(g, caps, components)
    return isinstance(verdict, Found) == (cert is None) == (forest is not None)


def run_oracle_agreement(
    count: int,
    seed: int,
    *,
    max_n: int = 7,
    max_edges: int = 14,
    max_palette: int = 5,
    max_cap: int = 3,
    solver=solve,
) -> LawReport:
    report = LawReport("oracle-agreement")
    for index in range(count):
        rng, key = _instance_rng(seed, "agreement", index)
        g, caps = sample_solver_instance(
            rng,
            max_n=max_n,
            max_edges=max_edges,
            max_palette=max_palette,
            max_cap=max_cap,
        )
        ok = all(
            oracle_agreement_holds(g, caps, m, solver=solver)
            for m in range(1, g.n + 1)
        )
        report.record(ok, key)
    return report


def density_guarantee_instance(
    rng: random.Random, index: int
) -> tuple[ColoredGraph, CapacityMap, int]:
    """Instance that provably passes the density check.

    Every fourth instance is a complete graph colored by perfect matchings
    with the minimal capacities the complete-graph threshold allows; the
    rest are complete graphs with uniform random colorings and capacities
    scaled up to the rational bound.
    """
    if index % 4 == 0:
        n = (4, 6, 8, 10)[(index // 4) % 4]
        g = generate(GenSpec(seed=rng.getrandbits(32), n=n, model="complete_factorized", coloring=None))
        components = rng.randint(1, n - 1)
        threshold = complete_graph_threshold(n, components)
        census = color_census(g)
        caps = CapacityMap(
            {c: math.ceil(Fraction(census[c]) / threshold) for c in sorted(census)}
        )
        return g, caps, components
    n = rng.randint(3, 8)
    components = rng.randint(1, min(3, n - 1))
    g = generate(
        GenSpec(
            seed=rng.getrandbits(32),
            n=n,
            model="complete",
            coloring="uniform",
            palette_size=rng.randint(1, 4),
        )
    )
    census = color_census(g)
    edge_count = len(g.edges)
    caps = CapacityMap(
        {
            c: math.ceil(Fraction(census.get(c, 0) * (n - components), edge_count))
            for c in g.sorted_palette()
        }
    )
    return g, caps, components


def run_density_guarantee(count: int, seed: int, *, solver=solve) -> LawReport:
    report = LawReport("density-guarantee")
    for index in range(count):
        rng, key = _instance_rng(seed, "density", index)
        g, caps, components = density_guarantee_instance(rng, index)
        outcome = density_sufficient(g, caps, components)
        if not outcome.guaranteed:
            raise InternalSolverError(
                f"sweep instance {key} was built to pass the density check"
            )
        report.record(isinstance(solver(g, caps, components), Found), key)
    return report


def run_bounded_complete(count: int, seed: int, *, solver=solve) -> LawReport:
    report = LawReport("bounded-complete")
    for index in range(count):
        rng, key = _instance_rng(seed, "bounded", index)
        n = rng.randint(4, 9)
        k = n // 2
        palette_size = math.ceil(math.comb(n, 2) / k) + rng.randint(0, 3)
        g = generate(
            GenSpec(
                seed=rng.getrandbits(32),
                n=n,
                model="complete",
                coloring="k_bounded",
                palette_size=palette_size,
                k=k,
            )
        )
        verdict = solver(g, CapacityMap.uniform(1), 1)
        report.record(isinstance(verdict, Found), key)
    return report


def run_all(count: int, seed: int, *, max_n: int = 7, solver=solve) -> SweepSummary:
    return SweepSummary(
        [
            run_oracle_agreement(count, seed, max_n=max_n, solver=solver),
            run_density_guarantee(count, seed, solver=solver),
            run_bounded_complete(count, seed, solver=solver),
        ]
    )
