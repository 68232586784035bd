"""Seeded instance generators for tests, sweeps, and experiment corpora.

All randomness comes from ``random.Random(seed)``, CPython's Mersenne
Twister; no ambient randomness is consulted. The draw order is fixed
(edges first, then the coloring), so an identical :class:`GenSpec` always
yields a bit-for-bit identical graph. Golden-file tests depend on this.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import CapacityMap, ColoredGraph, color_census

MODELS = ("gnp", "complete", "complete_factorized")
COLORINGS = ("uniform", "k_bounded", "capped")


@dataclass(frozen=True)
class GenSpec:
    """Deterministic recipe for one edge-colored graph.

    ``model`` picks the edge set: ``gnp`` keeps each pair with probability
    ``p``, ``complete`` keeps all pairs, and ``complete_factorized`` colors
    the complete graph on an even number of vertices by a round-robin
    schedule, one perfect matching per color (``coloring`` must be None
    there). The other models color edges by ``coloring``: ``uniform`` draws
    each edge's color independently from ``palette_size`` colors;
    ``k_bounded`` shuffles a pool holding each color ``k`` times, so no
    color exceeds ``k`` edges; ``capped`` does the same with per-color pool
    sizes taken from ``caps``.
    """

    seed: int
    n: int
    model: str = "gnp"
    p: float | None = None
    coloring: str | None = "uniform"
    palette_size: int | None = None
    k: int | None = None
    caps: CapacityMap | None = None


def _color_pool(spec: GenSpec, rng: random.Random, count: int):
    if spec.coloring == "uniform":
        size = spec.palette_size
        if size is None or size < 1:
            raise PreconditionError("uniform coloring needs palette_size >= 1")
        palette = frozenset(f"c{j}" for j in range(size))
        return [f"c{rng.randrange(size)}" for _ in range(count)], palette
    if spec.coloring == "k_bounded":
        size, k = spec.palette_size, spec.k
        if size is None or size < 1:
            raise PreconditionError("k_bounded coloring needs palette_size >= 1")
        if k is None or k < 0:
            raise PreconditionError("k_bounded coloring needs k >= 0")
        slots = [f"c{j}" for j in range(size) for _ in range(k)]
        if len(slots) < count:
            raise PreconditionError(
                f"cannot place {count} edges on {size} colors "
                f"with at most {k} edges each"
            )
        rng.shuffle(slots)
        return slots[:count], frozenset(f"c{j}" for j in range(size))
    if spec.coloring == "capped":
        caps = spec.caps
        if caps is None:
            raise PreconditionError("capped coloring needs a capacity map")
        if caps.default is not None:
            raise PreconditionError(
                "capped coloring needs explicit per-color budgets, not a default"
            )
        slots = [c for c in sorted(caps.assignments) for _ in range(caps.cap(c))]
        if len(slots) < count:
            raise PreconditionError(
                f"capacity pool of {len(slots)} cannot color {count} edges"
            )
        rng.shuffle(slots)
        return slots[:count], frozenset(caps.assignments)
    raise PreconditionError(f"unknown coloring {spec.coloring!r}")


def _factorized_complete(spec: GenSpec) -> ColoredGraph:
    n = spec.n
    if n % 2:
        raise PreconditionError(
            "the factorized model needs an even vertex count"
        )
    if spec.coloring is not None:
        raise PreconditionError("the factorized model fixes its own coloring")
    # circle method: vertex n-1 is pinned, the rest rotate; round r is the
    # matching {r, n-1} plus {(r+i) mod (n-1), (r-i) mod (n-1)}
    edges = []
    for r in range(max(n - 1, 0)):
        color = f"c{r}"
        edges.append((r, n - 1, color))
        for i in range(1, n // 2):
            a = (r + i) % (n - 1)
            b = (r - i) % (n - 1)
            edges.append((min(a, b), max(a, b), color))
    palette = frozenset(f"c{r}" for r in range(max(n - 1, 0)))
    return ColoredGraph(n, tuple(edges), palette=palette)


def generate(spec: GenSpec) -> ColoredGraph:
    """Build the graph described by ``spec``; same spec, same graph, always.

    The declared palette covers every color the recipe could have used,
    which may exceed the colors actually present.
    """
    if spec.n < 0:
        raise PreconditionError("vertex count must be non-negative")
    if spec.model == "complete_factorized":
        return _factorized_complete(spec)
    rng = random.Random(spec.seed)
    if spec.model == "complete":
        pairs = [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)]
    elif spec.model == "gnp":
        if spec.p is None or not 0.0 <= spec.p <= 1.0:
            raise PreconditionError("gnp model needs an edge probability p in [0, 1]")
        pairs = [
            (u, v)
            for u in range(spec.n)
            for v in range(u + 1, spec.n)
            if rng.random() < spec.p
        ]
    else:
        raise PreconditionError(f"unknown model {spec.model!r}")
    colors, palette = _color_pool(spec, rng, len(pairs))
    edges = tuple((u, v, c) for (u, v), c in zip(pairs, colors))
    return ColoredGraph(spec.n, edges, palette=palette)


def census_to_capacities(g: ColoredGraph) -> CapacityMap:
    """Tightest capacity map the graph already satisfies.

    Every present color gets exactly its edge count; decrementing any entry
    would put the graph over budget. Colors without edges get no entry.
    """
    return CapacityMap(color_census(g))
