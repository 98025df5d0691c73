"""Deterministic generators for trees, maps of each kind, and colorings.

Enumeration order is part of the contract: trees come lexicographically by
parent array, maps lexicographically by value tuple, colorings in counting
order.  Two runs produce identical sequences; parallel consumers may split by
value-tuple prefix ranges.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional

from .maps import TreeMap
from .trees import OrderedTree, all_trees, enum_trees  # re-exported tree generators

__all__ = [
    "enum_trees",
    "all_trees",
    "enum_embeddings",
    "all_embeddings",
    "enum_rigid_surjections",
    "all_rigid_surjections",
    "enum_colorings",
    "count_colorings",
]


def enum_embeddings(dom: OrderedTree, cod: OrderedTree) -> Iterator[TreeMap]:
    """All embeddings dom -> cod, lexicographically by value tuple.

    Embeddings are strictly increasing in the canonical numbering (monotone +
    injective), fix the root, and preserve meets; the backtracking assigns
    values in increasing order and checks meets against all earlier vertices.
    """
    ns, nt = dom.n, cod.n
    if ns > nt:
        return
    vals = [0] * ns  # root goes to root

    def extend(v: int) -> Iterator[TreeMap]:
        if v == ns:
            yield TreeMap(dom, cod, tuple(vals))
            return
        for t in range(vals[v - 1] + 1, nt - (ns - v) + 1):
            if all(vals[dom.meet(u, v)] == cod.meet(vals[u], t) for u in range(v)):
                vals[v] = t
                yield from extend(v + 1)

    if ns == 1:
        yield TreeMap(dom, cod, (0,))
        return
    yield from extend(1)


def enum_rigid_surjections(
    dom: OrderedTree,
    cod: OrderedTree,
    sealed: bool = False,
    a_prefix: Optional[int] = None,
) -> Iterator[TreeMap]:
    """All rigid surjections dom -> cod, lexicographically by value tuple.

    Backtracks over value tuples.  The injection of a rigid surjection is the
    fiberwise meet, which always equals the fiber's first element in canonical
    numbering; monotonicity of the injection then forces new values to appear
    in increasing order, so the candidate values at any position are the
    already-seen initial segment plus one fresh value.  Checks per assignment:
    seen value v needs first_occ(v) below w; a fresh value needs the meet law
    against every earlier first occurrence.  Sealedness pins the top value to
    the final position; a_prefix pins the first a_prefix values to the
    identity.
    """
    nt, ns = dom.n, cod.n
    if ns > nt:
        return
    if a_prefix is not None and (a_prefix < 0 or a_prefix > min(nt, ns)):
        return
    values = [0] * nt
    first_occ = [0] * ns
    dom_anc = dom.anc_mask

    def candidates(w: int, k: int) -> Iterator[int]:
        top = min(k, ns - 1)
        for v in range(top + 1):
            if sealed and v == ns - 1 and (w < nt - 1 or v < k):
                continue  # the top of the codomain first occurs exactly at the top of the domain
            if a_prefix is not None and w < a_prefix:
                if v != w:
                    continue
            if v < k:
                if not (dom_anc[w] >> first_occ[v]) & 1:
                    continue  # injection below identity fails
            else:
                ok = True
                for u in range(k):  # meet law for the fresh first occurrence
                    if first_occ[cod.meet(u, v)] != dom.meet(first_occ[u], w):
                        ok = False
                        break
                if not ok:
                    continue
            yield v

    def extend(w: int, k: int) -> Iterator[TreeMap]:
        if w == nt:
            if k == ns:
                yield TreeMap(dom, cod, tuple(values))
            return
        if ns - k > nt - w:
            return  # surjectivity budget
        for v in candidates(w, k):
            values[w] = v
            if v == k:
                first_occ[k] = w
                yield from extend(w + 1, k + 1)
            else:
                yield from extend(w + 1, k)

    yield from extend(0, 0)


@lru_cache(maxsize=None)
def all_embeddings(dom: OrderedTree, cod: OrderedTree) -> tuple[TreeMap, ...]:
    return tuple(enum_embeddings(dom, cod))


@lru_cache(maxsize=None)
def all_rigid_surjections(
    dom: OrderedTree, cod: OrderedTree, sealed: bool = False, a_prefix: Optional[int] = None
) -> tuple[TreeMap, ...]:
    return tuple(enum_rigid_surjections(dom, cod, sealed=sealed, a_prefix=a_prefix))


def rigid_surjections_with_injection(e: TreeMap) -> tuple[TreeMap, ...]:
    """All rigid surjections whose injection is the given embedding.

    Many maps can share one injection; no counting formula is asserted, the
    set is simply materialized.
    """
    from .maps import injection_of

    return tuple(
        f for f in enum_rigid_surjections(e.cod, e.dom) if injection_of(f) == e
    )


def enum_colorings(k: int, b: int, pin_first: bool = False) -> Iterator[tuple[int, ...]]:
    """All b^k colorings of k items in counting order (first item most significant).

    With pin_first the first item's color is fixed to 0, quotienting by the
    color-permutation symmetry that all monochromaticity questions enjoy.
    """
    if k < 0 or b < 1:
        raise ValueError("need k >= 0 and b >= 1")
    if k == 0:
        yield ()
        return
    if pin_first:
        for rest in itertools.product(range(b), repeat=k - 1):
            yield (0,) + rest
    else:
        yield from itertools.product(range(b), repeat=k)


def count_colorings(k: int, b: int, pin_first: bool = False) -> int:
    if k == 0:
        return 1
    return b ** (k - 1) if pin_first else b**k
