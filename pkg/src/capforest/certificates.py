"""Violating color sets: constructive extraction and exhaustive oracles.

When no qualifying forest exists, some color set ``R`` witnesses the
failure: deleting every ``R``-colored edge leaves strictly more components
than the target plus the total budget of ``R``, so no forest could bridge
the gap. :func:`extract_certificate` finds such a set by peeling a maximum
forest. The two oracle functions answer the same question by brute force
and exist to cross-check the solver and the peel on small instances; they
must stay independent of the augmenting-path machinery.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .engine import augment_step
from .errors import InternalSolverError, OracleLimitError, PreconditionError
from .graph import (
    CapacityMap,
    ColoredGraph,
    Forest,
    component_count,
    restrict_by_colors,
)


def evaluate_condition(
    g: ColoredGraph, caps: CapacityMap, components: int, colors: Iterable[str]
) -> tuple[int, int]:
    """Components left after deleting ``colors`` vs. the reconnection budget.

    Returns ``(remaining, budget)`` with ``budget = components`` plus the
    capacity total over ``colors``. The pair witnesses impossibility exactly
    when ``remaining > budget``.
    """
    colors = set(colors)
    remaining = component_count(restrict_by_colors(g, colors))
    budget = components + caps.total(colors)
    return remaining, budget


@dataclass(frozen=True)
class Certificate:
    """Proof that no qualifying forest exists.

    Deleting the ``violating`` colors leaves ``omega_measured`` components,
    strictly more than ``bound`` (the component target plus the violating
    colors' capacity total). Strictness is enforced at construction.
    """

    violating: frozenset[str]
    omega_measured: int
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "violating", frozenset(self.violating))
        if self.omega_measured <= self.bound:
            raise InternalSolverError(
                f"certificate does not witness a violation: "
                f"{self.omega_measured} <= {self.bound}"
            )

    def sorted_colors(self) -> list[str]:
        return sorted(self.violating)


@dataclass(frozen=True)
class PeelState:
    """One stage of certificate peeling.

    ``forbidden`` colors are locked out of the forest for good; ``active``
    colors cross between forest components but still appear on forest
    edges. Stage invariants: the two sets are disjoint, together they cover
    exactly the crossing colors, and no forbidden color occurs in the
    forest.
    """

    forest: Forest
    forbidden: frozenset[str]
    active: frozenset[str]

    def verify(self) -> None:
        """Check the stage invariants; any failure is a solver bug."""
        crossing = crossing_colors(self.forest.host, self.forest)
        if self.forbidden & self.active:
            raise InternalSolverError("peel invariant: forbidden and active overlap")
        if self.forbidden | self.active != crossing:
            raise InternalSolverError("peel invariant: crossing colors not covered")
        if self.forbidden & self.forest.colors():
            raise InternalSolverError("peel invariant: forest uses a forbidden color")


def crossing_edges(g: ColoredGraph, forest: Forest) -> list[int]:
    """Indices of edges whose endpoints lie in different forest components.

    Forest members never qualify (their endpoints share a component), so
    the result is disjoint from ``forest.members``.
    """
    forest.require_host(g)
    return [
        i for i, e in enumerate(g.edges) if not forest.same_component(e.u, e.v)
    ]


def crossing_colors(g: ColoredGraph, forest: Forest) -> frozenset[str]:
    return frozenset(g.edges[i].color for i in crossing_edges(g, forest))


def extract_certificate(
    g: ColoredGraph, caps: CapacityMap, components: int, max_forest: Forest
) -> Certificate:
    """Peel a maximum forest down to a violating color set.

    ``max_forest`` must be a maximum capacity-respecting forest that falls
    short of ``n - components`` edges (both checked; maximality via a
    residual augmentation attempt).

    Crossing colors absent from the forest start out forbidden: maximality
    forces their budget to zero, else the forest could grow by one crossing
    edge. Each round locks the remaining crossing colors and deletes their
    forest edges. Every deleted edge was at full budget (if some crossing
    color had slack anywhere among equivalent forests, an exchange would
    again yield a larger forest), so the component count stays at least one
    ahead of the locked budget total plus the target. Once every crossing
    color is locked, deleting the locked colors disconnects all former
    components and the inequality is violated outright; rather than trust
    this chain of reasoning, the result is re-verified by direct computation
    before it is returned.
    """
    max_forest.require_host(g)
    if max_forest.size >= g.n - components:
        raise PreconditionError(
            "forest already reaches the component target; nothing to certify"
        )
    if augment_step(g, caps, max_forest) is not None:
        raise PreconditionError(
            "forest is not maximum; certificate extraction needs a maximum forest"
        )

    forest = max_forest
    forbidden = crossing_colors(g, forest) - forest.colors()
    rounds = 0
    while True:
        state = PeelState(
            forest, frozenset(forbidden), crossing_colors(g, forest) - forbidden
        )
        state.verify()
        if not state.active:
            break
        rounds += 1
        if rounds > len(g.palette) + 1:
            raise InternalSolverError("peeling failed to terminate")
        keep = tuple(
            i for i in forest.members if g.edges[i].color not in state.active
        )
        forest = Forest(g, keep)
        forbidden = forbidden | state.active

    remaining, budget = evaluate_condition(g, caps, components, forbidden)
    if remaining <= budget:
        raise InternalSolverError(
            "peeling produced a color set that does not violate the bound"
        )
    return Certificate(frozenset(forbidden), remaining, budget)


def _lex_subsets(items: Sequence[str]) -> Iterator[tuple[str, ...]]:
    # lexicographic over sorted input: (), (a,), (a,b), (a,b,c), (a,c), (b,), ...
    prefix: list[str] = []

    def rec(start: int) -> Iterator[tuple[str, ...]]:
        yield tuple(prefix)
        for i in range(start, len(items)):
            prefix.append(items[i])
            yield from rec(i + 1)
            prefix.pop()

    yield from rec(0)


def oracle_condition(
    g: ColoredGraph,
    caps: CapacityMap,
    components: int,
    *,
    max_palette: int = 16,
) -> Certificate | None:
    """Exhaustively test the reconnection inequality over all color subsets.

    Returns the first violating subset in lexicographic order over the
    sorted palette (not necessarily a minimal one), or None when the
    inequality holds everywhere. Palettes beyond ``max_palette`` colors are
    refused.
    """
    colors = sorted(g.palette)
    if len(colors) > max_palette:
        raise OracleLimitError(
            f"palette of {len(colors)} colors exceeds the oracle limit "
            f"of {max_palette}"
        )
    for subset in _lex_subsets(colors):
        remaining, budget = evaluate_condition(g, caps, components, subset)
        if remaining > budget:
            return Certificate(frozenset(subset), remaining, budget)
    return None


class _RewindableDisjointSet:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self._trail: list[int] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self._trail.append(rb)
        return True

    def rewind(self) -> None:
        rb = self._trail.pop()
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def oracle_forest_search(
    g: ColoredGraph,
    caps: CapacityMap,
    components: int,
    *,
    max_edges: int = 20,
) -> Forest | None:
    """Backtracking search for a qualifying forest, independent of the solver.

    Enumerates acyclic, capacity-respecting edge subsets of size
    ``n - components`` in increasing index order and returns the first hit
    as a :class:`Forest`, or None when none exists. Graphs beyond
    ``max_edges`` edges are refused.
    """
    if len(g.edges) > max_edges:
        raise OracleLimitError(
            f"{len(g.edges)} edges exceed the search limit of {max_edges}"
        )
    need = g.n - components
    if need < 0 or need > len(g.edges):
        return None

    counts: dict[str, int] = {}
    chosen: list[int] = []
    dsu = _RewindableDisjointSet(g.n)
    total = len(g.edges)

    def extend(start: int) -> bool:
        if len(chosen) == need:
            return True
        for i in range(start, total):
            if total - i < need - len(chosen):
                return False
            e = g.edges[i]
            if counts.get(e.color, 0) >= caps.cap(e.color):
                continue
            if not dsu.union(e.u, e.v):
                continue
            counts[e.color] = counts.get(e.color, 0) + 1
            chosen.append(i)
            if extend(i + 1):
                return True
            chosen.pop()
            counts[e.color] -= 1
            dsu.rewind()
        return False

    if extend(0):
        return Forest(g, tuple(chosen))
    return None
