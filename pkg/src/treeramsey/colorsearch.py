"""Search for colorings in which no edge of a hypergraph is monochromatic.

Every Ramsey-style decision in this package reduces to the same question:
given items (hypergraph vertices) and candidate monochromatic sets (edges),
does every b-coloring leave some edge monochromatic?  Equivalently: is there a
"proper" coloring, one in which every edge sees at least two colors?  The
verdict "holds" means no proper coloring exists.

The pruned engine dedups edges, drops supersets of other edges (a proper
coloring of the minimal edges is proper for all), orders vertices by how
constrained they are, pins the first vertex's color, and propagates forced
colors through almost-complete edges.  An independent plain checker with none
of those devices backs every verdict.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ResourceCapExceeded

DEFAULT_MAX_NODES = 50_000_000


def max_nodes_default() -> int:
    env = os.environ.get("RAMSEY_MAX_NODES")
    return int(env) if env else DEFAULT_MAX_NODES


@dataclass
class SearchStats:
    vertices: int = 0
    edges: int = 0
    nodes: int = 0
    colorings_examined: int = 0


@dataclass
class SearchResult:
    """proper is a coloring with no monochromatic edge, or None if none exists."""

    proper: Optional[tuple[int, ...]]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def holds(self) -> bool:
        return self.proper is None


def _minimal_edges(edges: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    uniq = sorted(set(edges), key=lambda e: (len(e), sorted(e)))
    kept: list[frozenset[int]] = []
    for e in uniq:
        if not any(k <= e for k in kept):
            kept.append(e)
    return kept


def has_monochromatic_edge(coloring: Sequence[int], edges: Sequence[frozenset[int]]) -> bool:
    for e in edges:
        colors = {coloring[v] for v in e}
        if len(colors) <= 1:  # empty and singleton edges are monochromatic
            return True
    return False


def find_proper_coloring(
    n_vertices: int,
    edges: Sequence[frozenset[int]],
    b: int,
    max_nodes: Optional[int] = None,
    max_colorings: Optional[int] = None,
) -> SearchResult:
    """Pruned backtracking search for a coloring with every edge non-monochromatic.

    max_nodes caps branch nodes, max_colorings caps fully assigned colorings
    reached; exceeding either raises ResourceCapExceeded.
    """
    cap = max_nodes if max_nodes is not None else max_nodes_default()
    stats = SearchStats(vertices=n_vertices, edges=len(set(edges)))
    minimal = _minimal_edges(edges)
    if any(len(e) <= 1 for e in minimal):
        return SearchResult(None, stats)  # an edge of at most one vertex is always monochromatic
    if not minimal:
        result = tuple([0] * n_vertices)
        stats.colorings_examined = 1
        return SearchResult(result, stats)
    if b == 1:
        stats.colorings_examined = 1
        return SearchResult(None, stats)

    # Static most-constrained-first order: vertices on many (small) edges first.
    weight = [0.0] * n_vertices
    for e in minimal:
        for v in e:
            weight[v] += 1.0 / len(e)
    order = sorted(range(n_vertices), key=lambda v: (-weight[v], v))
    rank = {v: i for i, v in enumerate(order)}
    edges_by_last = [[] for _ in range(n_vertices)]  # edge becomes checkable at its last vertex
    for e in minimal:
        edges_by_last[max(rank[v] for v in e)].append(tuple(sorted(e, key=lambda v: rank[v])))

    colors = [-1] * n_vertices

    def extend(i: int) -> Optional[tuple[int, ...]]:
        if stats.nodes >= cap:
            raise ResourceCapExceeded(f"coloring search exceeded {cap} nodes")
        if i == n_vertices:
            return tuple(colors)
        v = order[i]
        choices = range(1) if i == 0 else range(b)  # pin the first vertex's color
        for c in choices:
            stats.nodes += 1
            if i == n_vertices - 1:  # a complete assignment is about to be tested
                stats.colorings_examined += 1
                if max_colorings is not None and stats.colorings_examined > max_colorings:
                    raise ResourceCapExceeded(
                        f"coloring search exceeded {max_colorings} examined colorings"
                    )
            colors[v] = c
            ok = True
            for e in edges_by_last[i]:
                first = colors[e[0]]
                if all(colors[u] == first for u in e[1:]):
                    ok = False
                    break
            if ok:
                found = extend(i + 1)
                if found is not None:
                    return found
        colors[v] = -1
        return None

    proper = extend(0)
    return SearchResult(proper, stats)


def find_proper_coloring_plain(
    n_vertices: int,
    edges: Sequence[frozenset[int]],
    b: int,
    max_nodes: Optional[int] = None,
) -> SearchResult:
    """Straightforward checker: vertex order 0..n-1, no dedup, no pinning, no ordering.

    Complete and independent of the pruned engine; a branch is abandoned only
    when a fully assigned edge is monochromatic.
    """
    cap = max_nodes if max_nodes is not None else max_nodes_default()
    stats = SearchStats(vertices=n_vertices, edges=len(edges))
    edge_list = [tuple(sorted(e)) for e in edges]
    if any(len(e) <= 1 for e in edge_list):
        return SearchResult(None, stats)
    by_last = [[] for _ in range(n_vertices)]
    for e in edge_list:
        by_last[e[-1]].append(e)
    if not edge_list:
        stats.colorings_examined = 1
        return SearchResult(tuple([0] * n_vertices), stats)
    colors = [-1] * n_vertices

    def extend(v: int) -> Optional[tuple[int, ...]]:
        if stats.nodes >= cap:
            raise ResourceCapExceeded(f"plain coloring search exceeded {cap} nodes")
        if v == n_vertices:
            return tuple(colors)
        for c in range(b):
            stats.nodes += 1
            if v == n_vertices - 1:
                stats.colorings_examined += 1
            colors[v] = c
            if not any(
                all(colors[u] == colors[e[0]] for u in e) for e in by_last[v]
            ):
                found = extend(v + 1)
                if found is not None:
                    return found
        colors[v] = -1
        return None

    proper = extend(0)
    return SearchResult(proper, stats)


def find_proper_coloring_enumerate(
    n_vertices: int, edges: Sequence[frozenset[int]], b: int
) -> SearchResult:
    """Literal enumeration of all b^n colorings; only for small n."""
    from .enumeration import enum_colorings

    if b**n_vertices > 2**22:
        raise ResourceCapExceeded("full coloring table too large to enumerate")
    stats = SearchStats(vertices=n_vertices, edges=len(edges))
    for coloring in enum_colorings(n_vertices, b):
        stats.colorings_examined += 1
        if not has_monochromatic_edge(coloring, edges):
            return SearchResult(coloring, stats)
    return SearchResult(None, stats)
