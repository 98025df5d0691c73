"""Deciding Ramsey witness trees, the classical bridges, and the sealed-to-plain assembly.

A witness question is a finite hypergraph problem: color the maps from the
candidate tree onto the small tree, one edge per composing map, and ask
whether every coloring leaves some edge monochromatic.  Verdicts carry the
counterexample coloring when they fail and are replayable without redoing the
search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import colorsearch
from .colorsearch import SearchStats
from .enumeration import all_embeddings, all_rigid_surjections
from .errors import (
    NotFoundWithinBound,
    PrerequisiteFailed,
    ResourceCapExceeded,
)
from .maps import (
    TreeMap,
    compose,
    conjugate_leaf,
    injection_of,
    is_rigid_surjection,
    is_sealed,
    restrict_conjugate,
    restrict_initial,
)
from .trees import OrderedTree, all_trees, chain, initial_subtree

__all__ = [
    "WitnessReport",
    "check_witness_mn",
    "check_witness_sealed",
    "search_witness",
    "replay_report",
    "bridge_prvo",
    "leeb_transport",
    "leeb_extract",
    "leeb_contract_check",
    "gr_compatibility",
    "assemble_plus",
    "lift_sealed",
    "assemble_V",
    "derive_mn_from_sealed",
]


@dataclass
class WitnessReport:
    """Outcome of one witness decision.

    mode is "mn" or "sealed"; vertices/edges describe the hypergraph actually
    searched; the counterexample (when failing) colors the vertex list in its
    stated order.  elapsed is wall-clock and deliberately left out of
    serialized forms.
    """

    verdict: str  # holds | fails | cap_exceeded
    b: int
    mode: str
    s: tuple
    t: tuple
    u: tuple
    counterexample: Optional[tuple[int, ...]]
    stats: SearchStats = field(default_factory=SearchStats)
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


def _mn_hypergraph(
    s: OrderedTree, t: OrderedTree, u: OrderedTree
) -> tuple[list[tuple[int, ...]], list[frozenset[int]]]:
    """Vertices: maps in RS(U, S) by value tuple; one edge per g0 in RS(U, T)."""
    vertices = [m.values for m in all_rigid_surjections(u, s)]
    pos = {v: i for i, v in enumerate(vertices)}
    fs = all_rigid_surjections(t, s)
    edges = []
    for g0 in all_rigid_surjections(u, t):
        edge = frozenset(pos[compose(f, g0).values] for f in fs)
        edges.append(edge)
    return vertices, edges


def _sealed_hypergraph(
    s: OrderedTree, t: OrderedTree, u: OrderedTree
) -> tuple[list[tuple[int, tuple[int, ...]]], list[frozenset[int]]]:
    """Vertices: sealed maps from every initial subtree of U onto S, keyed by
    (cut, values); one edge per cut v0 and sealed g: U^{v0} -> T, collecting
    f o g^t over t in T and sealed f: T^t -> S."""
    vertices: list[tuple[int, tuple[int, ...]]] = []
    pos: dict[tuple[int, tuple[int, ...]], int] = {}
    for v in range(u.n):
        for m in all_rigid_surjections(initial_subtree(u, v), s, sealed=True):
            key = (v, m.values)
            pos[key] = len(vertices)
            vertices.append(key)
    sealed_fs = {
        tv: all_rigid_surjections(initial_subtree(t, tv), s, sealed=True) for tv in range(t.n)
    }
    edges = []
    for v0 in range(u.n):
        u_cut = initial_subtree(u, v0)
        for g in all_rigid_surjections(u_cut, t, sealed=True):
            edge = set()
            for tv in range(t.n):
                if not sealed_fs[tv]:
                    continue
                g_t = restrict_initial(g, tv)
                for f in sealed_fs[tv]:
                    comp = compose(f, g_t)
                    edge.add(pos[(comp.dom.n - 1, comp.values)])
            edges.append(frozenset(edge))
    return vertices, edges


def _decide(
    b: int,
    mode: str,
    s: OrderedTree,
    t: OrderedTree,
    u: OrderedTree,
    max_nodes: Optional[int],
    max_colorings: Optional[int] = None,
) -> WitnessReport:
    start = time.monotonic()
    if mode == "mn":
        vertices, edges = _mn_hypergraph(s, t, u)
    else:
        vertices, edges = _sealed_hypergraph(s, t, u)
    try:
        result = colorsearch.find_proper_coloring(
            len(vertices), edges, b, max_nodes=max_nodes, max_colorings=max_colorings
        )
    except ResourceCapExceeded:
        return WitnessReport(
            "cap_exceeded", b, mode, s.parent, t.parent, u.parent, None,
            SearchStats(vertices=len(vertices), edges=len(set(edges))),
            time.monotonic() - start,
        )
    verdict = "holds" if result.holds else "fails"
    return WitnessReport(
        verdict, b, mode, s.parent, t.parent, u.parent, result.proper,
        result.stats, time.monotonic() - start,
    )


def check_witness_mn(
    b: int,
    s: OrderedTree,
    t: OrderedTree,
    u: OrderedTree,
    max_nodes: Optional[int] = None,
    max_colorings: Optional[int] = None,
) -> WitnessReport:
    """Does every b-coloring of RS(U, S) admit g0 in RS(U, T) with {f o g0} monochromatic?"""
    return _decide(b, "mn", s, t, u, max_nodes, max_colorings)


def check_witness_sealed(
    b: int,
    s: OrderedTree,
    t: OrderedTree,
    u: OrderedTree,
    max_nodes: Optional[int] = None,
    max_colorings: Optional[int] = None,
) -> WitnessReport:
    """Sealed variant: colorings of sealed maps from initial subtrees of U onto S,
    edges indexed by (v0, sealed g: U^{v0} -> T) collecting the f o g^t."""
    return _decide(b, "sealed", s, t, u, max_nodes, max_colorings)


def replay_report(report: WitnessReport) -> bool:
    """Re-verify a report without the pruned search.

    fails: the stored coloring must leave every edge polychromatic.  holds:
    re-decided by the plain checker (there is no succinct certificate).
    cap_exceeded: nothing to replay.
    """
    s, t, u = (OrderedTree(tuple(x)) for x in (report.s, report.t, report.u))
    if report.mode == "mn":
        vertices, edges = _mn_hypergraph(s, t, u)
    else:
        vertices, edges = _sealed_hypergraph(s, t, u)
    if report.verdict == "fails":
        if report.counterexample is None or len(report.counterexample) != len(vertices):
            return False
        return not colorsearch.has_monochromatic_edge(report.counterexample, edges)
    if report.verdict == "holds":
        return colorsearch.find_proper_coloring_plain(len(vertices), edges, report.b).holds
    return True


def search_witness(
    b: int,
    s: OrderedTree,
    t: OrderedTree,
    mode: str = "mn",
    max_vertices: int = 8,
    max_nodes: Optional[int] = None,
) -> tuple[OrderedTree, WitnessReport]:
    """First tree in enumeration order (chains only in chain mode) passing the check."""
    if mode not in ("mn", "sealed", "chain"):
        raise ValueError("mode must be mn, sealed or chain")
    for n in range(1, max_vertices + 1):
        candidates: Iterable[OrderedTree] = [chain(n)] if mode == "chain" else all_trees(n)
        for u in candidates:
            rep = _decide(b, "sealed" if mode == "sealed" else "mn", s, t, u, max_nodes)
            if rep.verdict == "cap_exceeded":
                raise ResourceCapExceeded(
                    f"candidate with {u.n} vertices hit the node cap; result inconclusive"
                )
            if rep.holds:
                return u, rep
    raise NotFoundWithinBound(f"no witness tree with at most {max_vertices} vertices")


# ---------------------------------------------------------------------------
# bridges to the two classical statements


def bridge_prvo(values: Sequence[int], n: int, k: int) -> tuple[bool, bool]:
    """(surjective growth-by-one test, tree-definition test) for a map of chains.

    The first verdict checks surjectivity plus f(y) <= 1 + max of f below y
    (empty max reading -1, so f(0) = 0); the second classifies the same values
    as a map between chain trees.  The two agree.
    """
    if len(values) != n:
        raise ValueError("value tuple length differs from the domain size")
    prvo = len(set(values)) == k and all(0 <= v < k for v in values)
    best = -1
    if prvo:
        for v in values:
            if v > best + 1:
                prvo = False
                break
            best = max(best, v)
    tree_verdict = is_rigid_surjection(TreeMap(chain(n), chain(k), tuple(values)))
    return prvo, tree_verdict


def leeb_transport(
    s: OrderedTree, u: OrderedTree, emb_coloring: Sequence[int]
) -> list[int]:
    """Color each rigid surjection U -> S by the color of its injection."""
    embeddings = all_embeddings(s, u)
    if len(emb_coloring) != len(embeddings):
        raise ValueError("coloring length differs from the number of embeddings")
    color_of = {e.values: c for e, c in zip(embeddings, emb_coloring)}
    return [color_of[injection_of(f).values] for f in all_rigid_surjections(u, s)]


def leeb_extract(g0: TreeMap) -> TreeMap:
    return injection_of(g0)


def leeb_contract_check(
    s: OrderedTree,
    t: OrderedTree,
    u: OrderedTree,
    emb_coloring: Sequence[int],
    g0: TreeMap,
) -> bool:
    """If {f o g0} is monochromatic under the transported coloring then
    {e0 o d : d an embedding S -> T} is monochromatic under the original."""
    transported = leeb_transport(s, u, emb_coloring)
    rs_index = {m.values: i for i, m in enumerate(all_rigid_surjections(u, s))}
    edge_colors = {
        transported[rs_index[compose(f, g0).values]] for f in all_rigid_surjections(t, s)
    }
    if len(edge_colors) > 1:
        return True  # nothing to check
    e0 = injection_of(g0)
    emb_index = {e.values: i for i, e in enumerate(all_embeddings(s, u))}
    derived = {
        emb_coloring[emb_index[compose(e0, d).values]] for d in all_embeddings(s, t)
    }
    return len(derived) <= 1 and (not derived or derived <= edge_colors)


def gr_compatibility(u: OrderedTree, l: int) -> bool:
    """Every rigid surjection from the tree U onto the chain [l] is one from the
    linear order (U, <=) onto [l] as well."""
    flat = chain(u.n)
    return all(
        is_rigid_surjection(TreeMap(flat, chain(l), f.values))
        for f in all_rigid_surjections(u, chain(l))
    )


# ---------------------------------------------------------------------------
# the sealed-to-plain assembly


def assemble_plus(s: OrderedTree) -> tuple[OrderedTree, int]:
    """S+ : one extra vertex, an immediate successor of the root and the largest."""
    return OrderedTree(s.parent + (0,)), s.n


def lift_sealed(f: TreeMap) -> TreeMap:
    """Extend a rigid surjection T -> S to the sealed map T+ -> S+ sending top to top.

    The old top of T is conjugate to the old top of S through the lift, and
    truncating the lift along that pair gives f back; both are asserted.
    """
    s_plus, s_new = assemble_plus(f.cod)
    t_plus, _ = assemble_plus(f.dom)
    lifted = TreeMap(t_plus, s_plus, f.values + (s_new,))
    assert is_sealed(lifted)
    old_top_s = f.cod.n - 1
    if old_top_s in s_plus.leaves:  # degenerate for one-vertex codomains (old top = root)
        assert conjugate_leaf(injection_of(lifted), old_top_s) == f.dom.n - 1
        back = restrict_conjugate(lifted, old_top_s)
        assert back.values == f.values and back.dom == f.dom and back.cod == f.cod
    return lifted


@dataclass
class Assembly:
    """V = 1 + (disjoint union of the rootless initial subtrees at each leaf),
    with the collapse maps onto each U^y."""

    tree: OrderedTree
    leaves: tuple[int, ...]  # leaves of U, in order
    projections: dict[int, TreeMap]  # y -> pi_y : V -> U^y
    inclusions: dict[int, TreeMap]  # y -> U^y -> V


def assemble_V(u: OrderedTree) -> Assembly:
    leaves = u.leaves
    parent: list[Optional[int]] = [None]
    offsets: dict[int, int] = {}
    for y in leaves:
        offsets[y] = len(parent)
        for i in range(1, y + 1):
            p = u.parent[i]
            parent.append(0 if p == 0 else offsets[y] + p - 1)
    v_tree = OrderedTree(tuple(parent))
    projections = {}
    inclusions = {}
    for y in leaves:
        vals = [0] * v_tree.n
        base = offsets[y]
        for i in range(1, y + 1):
            vals[base + i - 1] = i
        pi = TreeMap(v_tree, initial_subtree(u, y), tuple(vals))
        inc = TreeMap(
            initial_subtree(u, y), v_tree, (0,) + tuple(range(base, base + y))
        )
        assert injection_of(pi) == inc  # rigid, with the inclusion as injection
        projections[y] = pi
        inclusions[y] = inc
    return Assembly(v_tree, leaves, projections, inclusions)


def transport_through_projections(
    assembly: Assembly, coloring: dict[tuple[int, ...], int], s: OrderedTree
) -> dict[tuple[int, tuple[int, ...]], int]:
    """From a coloring of RS(V, S) to one of the RS(U^y, S), keyed (y, values)."""
    out = {}
    for y, pi in assembly.projections.items():
        for f in all_rigid_surjections(pi.cod, s):
            out[(y, f.values)] = coloring[compose(f, pi).values]
    return out


def transport_through_conjugates(
    u: OrderedTree,
    s_plus: OrderedTree,
    base: dict[tuple[int, tuple[int, ...]], int],
) -> Callable[[int, tuple[int, ...]], int]:
    """From a coloring of the RS(U^y, S), y a leaf, to one of the sealed maps from
    initial subtrees of U onto S+ (default color 0 off the leaf family)."""
    old_top = s_plus.n - 2

    def color(cut: int, values: tuple[int, ...]) -> int:
        h = TreeMap(initial_subtree(u, cut), s_plus, values)
        hs = restrict_conjugate(h, old_top)
        return base.get((hs.dom.n - 1, hs.values), 0)

    return color


def derive_mn_from_sealed(
    b: int,
    s: OrderedTree,
    t: OrderedTree,
    sealed_witness: OrderedTree,
    max_nodes: Optional[int] = None,
) -> tuple[OrderedTree, WitnessReport]:
    """Assemble a plain witness for (b, S, T) out of a sealed witness for (b, S+, T+).

    The preliminary sealed check must pass, else PrerequisiteFailed; the
    assembled tree is then decided by check_witness_mn and returned with its
    report.
    """
    s_plus, _ = assemble_plus(s)
    t_plus, _ = assemble_plus(t)
    pre = check_witness_sealed(b, s_plus, t_plus, sealed_witness, max_nodes=max_nodes)
    if not pre.holds:
        raise PrerequisiteFailed(
            f"tree is not a sealed witness for the extended pair (verdict {pre.verdict})"
        )
    assembly = assemble_V(sealed_witness)
    report = check_witness_mn(b, s, t, assembly.tree, max_nodes=max_nodes)
    return assembly.tree, report


def derivation_intermediates(
    b: int,
    s: OrderedTree,
    t: OrderedTree,
    sealed_witness: OrderedTree,
    coloring: dict[tuple[int, ...], int],
) -> dict:
    """Expose the constructive chain for one coloring of RS(V, S).

    Transports the coloring through the projections and the conjugate-leaf
    truncation, scans the sealed hypergraph for a monochromatic full-domain
    edge (v0 = top), and when one exists returns g+ together with g = (g+)_top
    and the final g o pi_{y0}.  Diagnostic only; the assembled tree's witness
    property is decided independently by check_witness_mn.
    """
    u = sealed_witness
    s_plus, _ = assemble_plus(s)
    t_plus, _ = assemble_plus(t)
    assembly = assemble_V(u)
    leaf_coloring = transport_through_projections(assembly, coloring, s)
    sealed_color = transport_through_conjugates(u, s_plus, leaf_coloring)
    out = {
        "assembly": assembly,
        "leaf_coloring": leaf_coloring,
        "g_plus": None,
        "g": None,
        "g_final": None,
    }
    old_top_t = t_plus.n - 2
    for g_plus in all_rigid_surjections(u, t_plus, sealed=True):
        colors = set()
        for tv in range(t_plus.n):
            g_t = restrict_initial(g_plus, tv)
            for f in all_rigid_surjections(initial_subtree(t_plus, tv), s_plus, sealed=True):
                comp = compose(f, g_t)
                colors.add(sealed_color(comp.dom.n - 1, comp.values))
        if len(colors) <= 1:
            g = restrict_conjugate(g_plus, old_top_t)
            y0 = g.dom.n - 1
            if y0 in assembly.projections:
                out["g_plus"] = g_plus
                out["g"] = g
                out["g_final"] = compose(g, assembly.projections[y0])
                return out
    return out
