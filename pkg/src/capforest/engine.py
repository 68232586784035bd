"""Maximum capacity-respecting forests and the exactly-m-components solver.

The maximiser grows a forest one edge at a time. Each step searches an
exchange structure over edge indices: swapping a forest edge for an outside
edge is safe when it either preserves acyclicity (the forest edge lies on
the unique forest path between the outside edge's endpoints) or preserves
the per-color budgets (both edges carry the same fully-used color). A
shortest chain of such swaps starting at an edge that joins two forest
components and ending at an edge whose color still has spare budget makes
the forest one edge larger; when no chain exists the forest has maximum
size among all capacity-respecting forests of the host graph, which the
exhaustive oracles in :mod:`capforest.certificates` cross-check at test
scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import InternalSolverError, PreconditionError
from .graph import CapacityMap, ColoredGraph, Forest

if TYPE_CHECKING:
    from .certificates import Certificate


@dataclass(frozen=True)
class Found:
    """A qualifying forest exists; here is one."""

    forest: Forest


@dataclass(frozen=True)
class Impossible:
    """No qualifying forest exists; the certificate proves it."""

    certificate: Certificate


SolveVerdict = Found | Impossible


def _forest_path_edges(adj, start: int, goal: int) -> list[int]:
    # breadth-first walk; callers guarantee start and goal share a component
    prev: dict[int, tuple[int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y, idx in adj[x]:
            if y not in prev:
                prev[y] = (x, idx)
                queue.append(y)
    path = []
    x = goal
    while prev[x] is not None:
        x, idx = prev[x]
        path.append(idx)
    return path


class ExchangeGraph:
    """Search structure for one augmentation step.

    Nodes are edge indices of the host graph. ``sources`` are outside edges
    joining two forest components; ``sinks`` are outside edges whose color
    still has spare budget (both sets exclude forest members, and an edge in
    both is a zero-length augmenting path). Arcs run from a member edge to
    every outside edge whose forest path contains it, and from an outside
    edge with a fully-used color to the member edges of that color.
    """

    def __init__(self, g: ColoredGraph, caps: CapacityMap, forest: Forest):
        counts = forest.color_counts()
        member_set = frozenset(forest.members)

        def spare(color: str) -> bool:
            return counts.get(color, 0) < caps.cap(color)

        self.sources: list[int] = []
        self.sinks: set[int] = set()
        inside: list[int] = []
        for i, e in enumerate(g.edges):
            if i in member_set:
                continue
            if forest.same_component(e.u, e.v):
                inside.append(i)
            else:
                self.sources.append(i)
            if spare(e.color):
                self.sinks.add(i)

        adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for i in forest.members:
            e = g.edges[i]
            adj[e.u].append((e.v, i))
            adj[e.v].append((e.u, i))
        self._arcs_from_member: dict[int, list[int]] = {i: [] for i in forest.members}
        for i in inside:
            e = g.edges[i]
            for member in _forest_path_edges(adj, e.u, e.v):
                self._arcs_from_member[member].append(i)

        self._members_by_color: dict[str, list[int]] = {}
        for i in forest.members:
            self._members_by_color.setdefault(g.edges[i].color, []).append(i)

        self._edges = g.edges
        self._member_set = member_set
        self._spare = spare

    def _neighbors(self, node: int) -> list[int]:
        if node in self._member_set:
            return self._arcs_from_member[node]
        color = self._edges[node].color
        if self._spare(color):
            return []  # the node is a sink; the search never continues past it
        return self._members_by_color.get(color, [])

    def shortest_augmenting_path(self) -> list[int] | None:
        """Shortest source-to-sink path, or None when the forest is maximum.

        Breadth-first, scanning each layer in increasing edge-index order,
        so ties always resolve the same way.
        """
        parent: dict[int, int | None] = {s: None for s in self.sources}
        layer = sorted(self.sources)
        while layer:
            for node in layer:
                if node in self.sinks:
                    path = []
                    cur: int | None = node
                    while cur is not None:
                        path.append(cur)
                        cur = parent[cur]
                    return path[::-1]
            nxt = []
            for node in layer:
                for nb in self._neighbors(node):
                    if nb not in parent:
                        parent[nb] = node
                        nxt.append(nb)
            layer = sorted(nxt)
        return None


def augment_step(
    g: ColoredGraph, caps: CapacityMap, forest: Forest
) -> Forest | None:
    """One augmentation: a forest one edge larger, or None at maximum size.

    The input forest must live on ``g`` and respect ``caps``. The returned
    forest is the symmetric difference of the old members with a shortest
    augmenting path, re-validated before it is handed back.
    """
    forest.require_host(g)
    for color, count in forest.color_counts().items():
        if count > caps.cap(color):
            raise PreconditionError(
                f"forest already exceeds the capacity of color {color!r}"
            )
    path = ExchangeGraph(g, caps, forest).shortest_augmenting_path()
    if path is None:
        return None
    new_members = frozenset(forest.members).symmetric_difference(path)
    try:
        bigger = Forest(g, tuple(sorted(new_members)))
    except PreconditionError as exc:
        raise InternalSolverError(f"augmentation broke acyclicity: {exc}") from exc
    counts = bigger.color_counts()
    if bigger.size != forest.size + 1 or any(
        count > caps.cap(color) for color, count in counts.items()
    ):
        raise InternalSolverError("augmentation produced an invalid forest")
    return bigger


def maximize_forest(g: ColoredGraph, caps: CapacityMap) -> Forest:
    """Largest capacity-respecting forest of ``g``.

    Starts from the empty forest, which always qualifies, and augments to a
    fixpoint. The result has the maximum edge count (equivalently, the
    minimum component count) over all capacity-respecting forests.
    """
    forest = Forest.empty(g)
    while (bigger := augment_step(g, caps, forest)) is not None:
        forest = bigger
    return forest


def prune_to_components(forest: Forest, components: int) -> Forest:
    """Drop highest-index edges until exactly ``components`` parts remain.

    Removing any forest edge splits one component in two and never raises a
    color count, so the pruned forest stays within every capacity; taking
    the highest indices first just fixes one deterministic choice.
    """
    n = forest.host.n
    if not 1 <= components <= n:
        raise PreconditionError(
            f"component target must be in 1..{n}, got {components}"
        )
    excess = components - forest.num_components
    if excess < 0:
        raise PreconditionError(
            "forest has more components than the target; cannot prune upward"
        )
    if excess == 0:
        return forest
    return Forest(forest.host, forest.members[: forest.size - excess])


def solve(g: ColoredGraph, caps: CapacityMap, components: int) -> SolveVerdict:
    """Spanning forest with exactly ``components`` parts within ``caps``.

    Returns :class:`Found` with such a forest when one exists, otherwise
    :class:`Impossible` with a violating color set that proves there is
    none. ``components`` must lie in ``1..n``.
    """
    if not 1 <= components <= g.n:
        raise PreconditionError(
            f"component count must be in 1..{g.n}, got {components}"
        )
    best = maximize_forest(g, caps)
    if best.size >= g.n - components:
        return Found(prune_to_components(best, components))
    from .certificates import extract_certificate

    return Impossible(extract_certificate(g, caps, components, best))


def exact_profile_forest(
    g: ColoredGraph, caps: CapacityMap, components: int
) -> SolveVerdict:
    """Solve when the capacities sum to exactly the number of forest edges.

    Requires the capacity total over the palette to equal ``n - components``.
    Any forest found then carries exactly ``caps.cap(c)`` edges of every
    color ``c`` (it has ``n - components`` edges, each color at most its
    capacity, and the capacities leave no slack), which is re-checked before
    returning.
    """
    if not 1 <= components <= g.n:
        raise PreconditionError(
            f"component count must be in 1..{g.n}, got {components}"
        )
    need = g.n - components
    total = caps.total(g.palette)
    if total != need:
        raise PreconditionError(
            f"capacities over the palette sum to {total}, expected {need}"
        )
    verdict = solve(g, caps, components)
    if isinstance(verdict, Found):
        counts = verdict.forest.color_counts()
        for color in g.palette:
            if counts.get(color, 0) != caps.cap(color):
                raise InternalSolverError(
                    "forest misses the exact per-color profile"
                )
    return verdict
