"""Independent brute-force oracles used to cross-check the solver.

Everything here recomputes from first principles (breadth-first component
counts, exhaustive subset enumeration) and deliberately avoids the
package's union-find and augmentation code paths.
"""

from collections import deque
from itertools import combinations


def bfs_component_count(n, edges):
    """Component count via breadth-first search over an explicit edge list."""
    adj = {v: [] for v in range(n)}
    for u, v, *_ in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    parts = 0
    for start in range(n):
        if start in seen:
            continue
        parts += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return parts


def components_without_colors(g, colors):
    banned = set(colors)
    kept = [e for e in g.edges if e.color not in banned]
    return bfs_component_count(g.n, kept)


def is_acyclic(n, edges):
    # a simple graph is a forest iff |E| = n - (number of components)
    return len(edges) == n - bfs_component_count(n, edges)


def within_capacities(edges, caps):
    counts = {}
    for e in edges:
        counts[e.color] = counts.get(e.color, 0) + 1
    return all(count <= caps.cap(color) for color, count in counts.items())


def brute_force_max_forest_size(g, caps):
    """Size of the largest capacity-respecting forest, by subset enumeration."""
    indices = range(len(g.edges))
    for size in range(min(g.n - 1, len(g.edges)), -1, -1):
        for subset in combinations(indices, size):
            chosen = [g.edges[i] for i in subset]
            if within_capacities(chosen, caps) and is_acyclic(g.n, chosen):
                return size
    return 0


def all_color_subsets(palette):
    colors = sorted(palette)
    for size in range(len(colors) + 1):
        yield from combinations(colors, size)


def brute_force_condition_holds(g, caps, components):
    """Exhaustive check of the component/budget inequality over all subsets."""
    for subset in all_color_subsets(g.palette):
        remaining = components_without_colors(g, subset)
        if remaining > components + sum(caps.cap(c) for c in subset):
            return False
    return True


def min_max_bound(g, caps):
    """min over color sets R of (n - components(G without R) + budget of R)."""
    return min(
        g.n
        - components_without_colors(g, subset)
        + sum(caps.cap(c) for c in subset)
        for subset in all_color_subsets(g.palette)
    )


def rainbow_tree_condition(g):
    """All-distinct-colors spanning-tree criterion for connected graphs:
    removing any color set R must leave at most |R| + 1 components."""
    return all(
        components_without_colors(g, subset) <= len(subset) + 1
        for subset in all_color_subsets(g.palette)
    )


def set_partitions(items):
    """All partitions of a list into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def rainbow_tree_partition_condition(g):
    """Equivalent partition form of the criterion: every split of the
    vertices into t blocks must be crossed by edges of >= t - 1 distinct
    colors."""
    for part in set_partitions(list(range(g.n))):
        block_of = {v: i for i, block in enumerate(part) for v in block}
        crossing_colors = {
            e.color for e in g.edges if block_of[e.u] != block_of[e.v]
        }
        if len(crossing_colors) < len(part) - 1:
            return False
    return True
