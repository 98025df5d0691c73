"""Maps between ordered trees: morphisms, embeddings, rigid surjections.

A morphism preserves meets, is monotone for the lexicographic orders and sends
root to root; an embedding is an injective morphism.  A rigid surjection
f: T -> S is a map admitting an embedding e: S -> T with

    f o e = id_S   and   e o f below id_T  (pointwise in the tree order),

i.e. (f, e) is a perfect Galois connection (embedding-projection pair).  The
witness e is unique and computable as the fiberwise meet e(v) = meet f^{-1}(v);
we call it the injection of f.  Classification never trusts a flag: the meet
formula produces a candidate which is then verified, so the same routine
decides rigidity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import (
    DomainMismatch,
    NotEmbedding,
    NotLeaf,
    NotRigid,
    VertexOutOfRange,
)
from .trees import OrderedTree, initial_subtree

__all__ = [
    "TreeMap",
    "KindFlags",
    "classify",
    "is_morphism",
    "is_embedding",
    "try_injection",
    "injection_of",
    "is_rigid_surjection",
    "is_sealed",
    "is_a_rigid",
    "compose",
    "identity",
    "rigid_from_embedding",
    "restrict_initial",
    "conjugate_leaf",
    "restrict_conjugate",
    "check_block_condition",
]


@dataclass(frozen=True)
class TreeMap:
    """A total function between canonical ordered trees, stored as a value tuple."""

    dom: OrderedTree
    cod: OrderedTree
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom.n:
            raise DomainMismatch(
                f"map has {len(self.values)} values for a domain of size {self.dom.n}"
            )
        for v in self.values:
            if not (0 <= v < self.cod.n):
                raise VertexOutOfRange(f"value {v} outside codomain of size {self.cod.n}")

    def __call__(self, v: int) -> int:
        return self.values[v]

    def __repr__(self) -> str:
        return f"TreeMap({list(self.values)}: {self.dom.n}->{self.cod.n})"

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod.n


def identity(t: OrderedTree) -> TreeMap:
    return TreeMap(t, t, tuple(range(t.n)))


def is_morphism(m: TreeMap) -> bool:
    """Meet-preserving, monotone, root-to-root."""
    if m.values[0] != 0:
        return False
    dom, cod, f = m.dom, m.cod, m.values
    for v in range(1, dom.n):  # monotone along the (numeric) linear order
        if f[v - 1] > f[v]:
            return False
    for v in range(dom.n):
        for w in range(v + 1, dom.n):
            if f[dom.meet(v, w)] != cod.meet(f[v], f[w]):
                return False
    return True


def is_embedding(m: TreeMap) -> bool:
    return len(set(m.values)) == m.dom.n and is_morphism(m)


def try_injection(f: TreeMap) -> Optional[TreeMap]:
    """Injection of f if f is a rigid surjection, else None.

    Builds the fiberwise-meet candidate and verifies both Galois identities and
    candidate morphism-ness; a failed check means f is not rigid.
    """
    dom, cod = f.dom, f.cod
    fibers_meet: list[Optional[int]] = [None] * cod.n
    for w, v in enumerate(f.values):
        fibers_meet[v] = w if fibers_meet[v] is None else dom.meet(fibers_meet[v], w)
    if any(m is None for m in fibers_meet):
        return None  # not surjective
    e = TreeMap(cod, dom, tuple(fibers_meet))  # type: ignore[arg-type]
    for v in range(cod.n):  # f o e = id
        if f.values[e.values[v]] != v:
            return None
    for w in range(dom.n):  # e o f below id
        if not dom.below(e.values[f.values[w]], w):
            return None
    if not is_morphism(e):
        return None
    return e


def injection_of(f: TreeMap) -> TreeMap:
    e = try_injection(f)
    if e is None:
        raise NotRigid(f"{f} is not a rigid surjection")
    return e


def is_rigid_surjection(f: TreeMap) -> bool:
    return try_injection(f) is not None


def is_sealed(f: TreeMap) -> bool:
    """Rigid and the injection sends the largest leaf to the largest leaf.

    In canonical form the lexicographically largest vertex is always a leaf,
    so sealedness reads e(|S|-1) = |T|-1.
    """
    e = try_injection(f)
    return e is not None and e.values[-1] == f.dom.n - 1


def is_a_rigid(f: TreeMap, a_size: int) -> bool:
    """Rigid surjection restricting to the identity on the bottom chain A."""
    if not (1 <= a_size <= f.dom.n and a_size <= f.cod.n):
        return False
    if any(f.values[i] != i for i in range(a_size)):
        return False
    return is_rigid_surjection(f)


@dataclass(frozen=True)
class KindFlags:
    morphism: bool
    embedding: bool
    rigid_surjection: bool
    sealed: bool
    injection: Optional[TreeMap] = None


def classify(m: TreeMap) -> KindFlags:
    """Recompute every kind flag from the definitions (flags are never trusted)."""
    mor = is_morphism(m)
    emb = mor and len(set(m.values)) == m.dom.n
    e = try_injection(m)
    return KindFlags(
        morphism=mor,
        embedding=emb,
        rigid_surjection=e is not None,
        sealed=e is not None and e.values[-1] == m.dom.n - 1,
        injection=e,
    )


def compose(f: TreeMap, g: TreeMap) -> TreeMap:
    """Plain composition f o g; rigidity is preserved with composed injections."""
    if g.cod != f.dom:
        raise DomainMismatch("cod(g) != dom(f)")
    return TreeMap(g.dom, f.cod, tuple(f.values[x] for x in g.values))


def rigid_from_embedding(e: TreeMap) -> TreeMap:
    """The rigid surjection f(w) = largest v (tree order) with e(v) below w.

    Its injection is e; this inverts the injection and shows every embedding
    arises as one.
    """
    if not is_embedding(e):
        raise NotEmbedding(f"{e} is not an embedding")
    s, t = e.dom, e.cod
    values = []
    for w in range(t.n):
        best, best_ht = None, -1
        for v in range(s.n):
            if t.below(e.values[v], w) and s.height[v] > best_ht:
                best, best_ht = v, s.height[v]
        assert best is not None  # e(root)=root is below everything
        values.append(best)
    f = TreeMap(t, s, tuple(values))
    assert try_injection(f) == e
    return f


def restrict_initial(f: TreeMap, v: int) -> TreeMap:
    """f^v: restriction of a rigid f: T -> S to T^{i(v)}, a sealed map onto S^v."""
    e = injection_of(f)
    f.cod._check(v)
    iv = e.values[v]
    out = TreeMap(initial_subtree(f.dom, iv), initial_subtree(f.cod, v), f.values[: iv + 1])
    assert out.is_surjective  # image is exactly S^v
    return out


def conjugate_leaf(e: TreeMap, x: int) -> int:
    """The leaf of T conjugate to the leaf x of S through the embedding e: S -> T.

    The largest leaf pairs with the largest leaf; otherwise, with x' the next
    leaf after x, the conjugate is the largest leaf y below i(x') in the linear
    order with meet(i(x), i(x')) = meet(y, i(x')).
    """
    if not is_embedding(e):
        raise NotEmbedding(f"{e} is not an embedding")
    s, t = e.dom, e.cod
    if x not in s.leaves:
        raise NotLeaf(f"{x} is not a leaf of the source tree")
    if x == s.leaves[-1]:
        return t.leaves[-1]
    x1 = min(l for l in s.leaves if l > x)  # next leaf in the linear order
    ix, ix1 = e.values[x], e.values[x1]
    pivot = t.meet(ix, ix1)
    candidates = [y for y in t.leaves if y < ix1 and t.meet(y, ix1) == pivot]
    assert candidates, "a conjugate leaf always exists (e.g. any leaf above i(x))"
    return max(candidates)


def restrict_conjugate(f: TreeMap, x: int) -> TreeMap:
    """f_x: restriction of a rigid f: T -> S to T^y, y the f-conjugate of the leaf x.

    The image is exactly S^x, so this truncates along conjugate leaves.
    """
    e = injection_of(f)
    y = conjugate_leaf(e, x)
    out = TreeMap(initial_subtree(f.dom, y), initial_subtree(f.cod, x), f.values[: y + 1])
    assert out.is_surjective
    return out


def check_block_condition(
    p: Sequence[int], a_size: int, l_size: int, i_size: int, assert_rigid: bool = False
) -> bool:
    """Block condition for p: A + (L x I) -> A + L (chains, lexicographic L x I).

    Requires p to be the identity on A and, for each x in L, the block
    {x} x I to hit x and land inside A u {x}.  Every such p is an A-rigid
    surjection (checked when assert_rigid is set).
    """
    if len(p) != a_size + l_size * i_size:
        raise DomainMismatch("p has the wrong domain size")
    if any(p[j] != j for j in range(a_size)):
        return False
    for x in range(l_size):
        block = p[a_size + x * i_size : a_size + (x + 1) * i_size]
        target = a_size + x
        if target not in block:
            return False
        if any(not (val < a_size or val == target) for val in block):
            return False
    if assert_rigid:
        from .trees import chain

        m = TreeMap(chain(a_size + l_size * i_size), chain(a_size + l_size), tuple(p))
        assert is_rigid_surjection(m)
    return True
