"""Plain-text instance files and capacity sidecars.

Instance format, one directive per line; ``#`` starts a comment and blank
lines are ignored::

    graph <n>            vertex count; required, exactly once, before edges
    e <u> <v> <color>    one edge; u, v in 0..n-1, color any bare token
    f <color> <cap>      capacity for one color
    fdefault <cap>       capacity for colors without an explicit entry

Capacity sidecar files take only ``f``/``fdefault`` directives. When both
the instance and a sidecar assign the same color (or both set a default),
the sidecar wins; duplicate assignments within a single file are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceParseError
from .graph import CapacityMap, ColoredGraph, Forest


@dataclass(frozen=True)
class Instance:
    """A parsed instance file: the graph plus its inline capacities."""

    graph: ColoredGraph
    capacities: dict[str, int]
    default_capacity: int | None


def _int_field(token: str, what: str, where: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InstanceParseError(f"{where}: {what} must be an integer, got {token!r}")
    return value


def _capacity_field(token: str, where: str) -> int:
    value = _int_field(token, "capacity", where)
    if value < 0:
        raise InstanceParseError(f"{where}: capacity must be non-negative")
    return value


def parse_instance(text: str, source: str = "<instance>") -> Instance:
    """Parse instance text; errors carry ``source:line``."""
    n: int | None = None
    edges: list[tuple[int, int, str]] = []
    pairs: set[frozenset[int]] = set()
    caps: dict[str, int] = {}
    default: int | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{source}:{lineno}"
        fields = line.split()
        word, args = fields[0], fields[1:]
        if word == "graph":
            if n is not None:
                raise InstanceParseError(f"{where}: duplicate 'graph' header")
            if len(args) != 1:
                raise InstanceParseError(f"{where}: expected 'graph <n>'")
            n = _int_field(args[0], "vertex count", where)
            if n < 0:
                raise InstanceParseError(f"{where}: vertex count must be non-negative")
        elif word == "e":
            if n is None:
                raise InstanceParseError(f"{where}: edge before 'graph' header")
            if len(args) != 3:
                raise InstanceParseError(f"{where}: expected 'e <u> <v> <color>'")
            u = _int_field(args[0], "vertex id", where)
            v = _int_field(args[1], "vertex id", where)
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceParseError(
                    f"{where}: vertex out of range 0..{n - 1}"
                )
            if u == v:
                raise InstanceParseError(f"{where}: loop at vertex {u}")
            pair = frozenset((u, v))
            if pair in pairs:
                raise InstanceParseError(f"{where}: duplicate edge {{{u},{v}}}")
            pairs.add(pair)
            edges.append((u, v, args[2]))
        elif word == "f":
            if len(args) != 2:
                raise InstanceParseError(f"{where}: expected 'f <color> <cap>'")
            color = args[0]
            if color in caps:
                raise InstanceParseError(
                    f"{where}: duplicate capacity for color {color!r}"
                )
            caps[color] = _capacity_field(args[1], where)
        elif word == "fdefault":
            if len(args) != 1:
                raise InstanceParseError(f"{where}: expected 'fdefault <cap>'")
            if default is not None:
                raise InstanceParseError(f"{where}: duplicate 'fdefault'")
            default = _capacity_field(args[0], where)
        else:
            raise InstanceParseError(f"{where}: unknown directive {word!r}")

    if n is None:
        raise InstanceParseError(f"{source}: missing 'graph <n>' header")
    return Instance(ColoredGraph(n, tuple(edges)), caps, default)


def parse_capacity_file(
    text: str, source: str = "<capacities>"
) -> tuple[dict[str, int], int | None]:
    """Parse a capacity sidecar; returns (assignments, default)."""
    caps: dict[str, int] = {}
    default: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{source}:{lineno}"
        fields = line.split()
        word, args = fields[0], fields[1:]
        if word == "f":
            if len(args) != 2:
                raise InstanceParseError(f"{where}: expected 'f <color> <cap>'")
            color = args[0]
            if color in caps:
                raise InstanceParseError(
                    f"{where}: duplicate capacity for color {color!r}"
                )
            caps[color] = _capacity_field(args[1], where)
        elif word == "fdefault":
            if len(args) != 1:
                raise InstanceParseError(f"{where}: expected 'fdefault <cap>'")
            if default is not None:
                raise InstanceParseError(f"{where}: duplicate 'fdefault'")
            default = _capacity_field(args[0], where)
        else:
            raise InstanceParseError(
                f"{where}: unknown directive {word!r} in capacity file"
            )
    return caps, default


def resolve_capacities(
    instance: Instance, sidecar: tuple[dict[str, int], int | None] | None = None
) -> CapacityMap:
    """Merge inline and sidecar capacities; sidecar entries win per color."""
    caps = dict(instance.capacities)
    default = instance.default_capacity
    if sidecar is not None:
        side_caps, side_default = sidecar
        caps.update(side_caps)
        if side_default is not None:
            default = side_default
    return CapacityMap(caps, default=default)


def emit_instance(
    graph: ColoredGraph,
    capacities: dict[str, int] | None = None,
    default_capacity: int | None = None,
) -> str:
    """Render a graph (and optional capacities) back to instance text.

    Re-parsing the output reproduces the same vertex count, the same edge
    list in the same order, and the same capacities.
    """
    lines = [f"graph {graph.n}"]
    if default_capacity is not None:
        lines.append(f"fdefault {default_capacity}")
    for color in sorted(capacities or {}):
        lines.append(f"f {color} {capacities[color]}")
    for e in graph.edges:
        lines.append(f"e {e.u} {e.v} {e.color}")
    return "\n".join(lines) + "\n"


def _dot_quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def graph_to_dot(graph: ColoredGraph, forest: Forest | None = None) -> str:
    """Graph (and chosen forest, drawn bold) in DOT for external rendering."""
    member = frozenset(forest.members) if forest is not None else frozenset()
    lines = ["graph instance {"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for i, e in enumerate(graph.edges):
        attrs = f'label="{_dot_quote(e.color)}"'
        if i in member:
            attrs += ", penwidth=3"
        lines.append(f"  {e.u} -- {e.v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
