"""Edge-colored graphs, per-color capacity maps, and spanning forests.

Vertices are dense integer ids ``0..n-1``; input labels should be mapped to
ids before construction. Colors are arbitrary strings compared and sorted
lexicographically, and that order drives every deterministic iteration in
the package. The three core types are immutable after construction and can
be shared freely between threads; union-find scratch state is created per
call.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    EmptyGraphError,
    GraphConstructionError,
    MissingCapacityError,
    PreconditionError,
)


class Edge(NamedTuple):
    u: int
    v: int
    color: str


class DisjointSet:
    """Union-find over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False when already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph with one color label per edge.

    ``palette`` is the union of the colors occurring on edges and any
    explicitly declared extras, so it may be larger than the set of colors
    actually present. Edge order is preserved exactly as given; it anchors
    deterministic solver output.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    palette: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphConstructionError("vertex count must be non-negative")
        edges = tuple(Edge(int(u), int(v), str(c)) for u, v, c in self.edges)
        seen: set[frozenset[int]] = set()
        for u, v, _color in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphConstructionError(
                    f"edge ({u},{v}) out of range for n={self.n}"
                )
            if u == v:
                raise GraphConstructionError(f"loop at vertex {u}")
            pair = frozenset((u, v))
            if pair in seen:
                raise GraphConstructionError(f"duplicate edge {{{u},{v}}}")
            seen.add(pair)
        palette = frozenset(self.palette) | {e.color for e in edges}
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "palette", palette)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_palette(self) -> list[str]:
        return sorted(self.palette)


@dataclass(frozen=True)
class CapacityMap:
    """Total mapping from colors to non-negative integer edge budgets.

    A color resolves to its explicit entry, falling back to ``default``;
    querying a color with neither is a :class:`MissingCapacityError`.
    """

    assignments: Mapping[str, int] = field(default_factory=dict)
    default: int | None = None

    def __post_init__(self):
        assignments = {}
        for color, cap in dict(self.assignments).items():
            if not isinstance(cap, int) or isinstance(cap, bool) or cap < 0:
                raise PreconditionError(
                    f"capacity for color {color!r} must be a non-negative integer"
                )
            assignments[str(color)] = cap
        if self.default is not None and (
            not isinstance(self.default, int) or self.default < 0
        ):
            raise PreconditionError("default capacity must be a non-negative integer")
        object.__setattr__(self, "assignments", assignments)

    @classmethod
    def uniform(cls, cap: int) -> CapacityMap:
        """Capacity ``cap`` for every color (``uniform(1)`` forbids repeats)."""
        return cls({}, default=cap)

    def cap(self, color: str) -> int:
        value = self.assignments.get(color, self.default)
        if value is None:
            raise MissingCapacityError(
                f"no capacity assigned to color {color!r} and no default set"
            )
        return value

    def total(self, colors: Iterable[str]) -> int:
        return sum(self.cap(c) for c in colors)


@dataclass(frozen=True)
class Forest:
    """Acyclic subset of a host graph's edges, with its vertex partition.

    ``members`` holds sorted indices into ``host.edges``. Vertices are
    labelled by the smallest vertex id of their component, so labels do not
    depend on construction order. Spanning is implicit: every vertex of the
    host belongs to exactly one component, isolated ones included.
    """

    host: ColoredGraph
    members: tuple[int, ...] = ()
    _comp: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        raw = tuple(int(i) for i in self.members)
        members = tuple(sorted(set(raw)))
        if len(members) != len(raw):
            raise PreconditionError("duplicate edge indices in forest")
        dsu = DisjointSet(self.host.n)
        for i in members:
            if not 0 <= i < len(self.host.edges):
                raise PreconditionError(f"edge index {i} out of range")
            e = self.host.edges[i]
            if not dsu.union(e.u, e.v):
                raise PreconditionError(f"edge #{i} ({e.u},{e.v}) closes a cycle")
        label: dict[int, int] = {}
        comp = []
        for v in range(self.host.n):
            root = dsu.find(v)
            comp.append(label.setdefault(root, v))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_comp", tuple(comp))
        # edge count + component count must tile the vertex set exactly
        assert len(label) == self.host.n - len(members)

    @classmethod
    def empty(cls, host: ColoredGraph) -> Forest:
        return cls(host, ())

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def num_components(self) -> int:
        return self.host.n - len(self.members)

    def component_of(self, v: int) -> int:
        return self._comp[v]

    def same_component(self, u: int, v: int) -> bool:
        return self._comp[u] == self._comp[v]

    def member_edges(self) -> list[tuple[int, Edge]]:
        return [(i, self.host.edges[i]) for i in self.members]

    def color_counts(self) -> dict[str, int]:
        return dict(Counter(self.host.edges[i].color for i in self.members))

    def colors(self) -> frozenset[str]:
        return frozenset(self.host.edges[i].color for i in self.members)

    def require_host(self, g: ColoredGraph) -> None:
        if self.host is not g and self.host != g:
            raise PreconditionError("forest belongs to a different host graph")


def restrict_by_colors(g: ColoredGraph, colors: Iterable[str]) -> ColoredGraph:
    """Drop every edge whose color lies in ``colors``.

    The survivors keep their relative order; the palette is unchanged.
    ``colors`` may be empty or mention colors absent from the graph.
    """
    banned = set(colors)
    kept = tuple(e for e in g.edges if e.color not in banned)
    return ColoredGraph(g.n, kept, palette=g.palette)


def component_count(g: ColoredGraph) -> int:
    """Number of connected components, by union-find over the edge list."""
    if g.n == 0:
        raise EmptyGraphError("component count is undefined on zero vertices")
    dsu = DisjointSet(g.n)
    for e in g.edges:
        dsu.union(e.u, e.v)
    return dsu.components


def color_census(g: ColoredGraph) -> dict[str, int]:
    """Per-color edge counts, for the colors that actually occur."""
    return dict(Counter(e.color for e in g.edges))


def respects_capacities(g: ColoredGraph, caps: CapacityMap) -> bool:
    """True when every color's edge count stays within its capacity."""
    return all(
        count <= caps.cap(color) for color, count in color_census(g).items()
    )
