"""Ordered trees, ordered forests and linear orders in canonical parent-array form.

A tree is a finite poset with a single minimum (the root) in which the
predecessors of every vertex form a chain; an ordered tree additionally fixes a
linear order on each vertex's immediate successors, which induces the
lexicographic order on all vertices (root first, then each child's subtree in
sibling order -- i.e. preorder).

Canonical encoding: vertices are 0..n-1 numbered in lexicographic order, stored
as a parent array with ``parent[0] = None`` and ``parent[i] < i``.  Sibling
order is index order.  Under this encoding the tree order is the ancestor
relation and the lexicographic order is plain integer order, so tree equality
is tuple equality.  All vertex ids in this package are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import (
    DuplicateAttachPoint,
    EmptyAlphabet,
    EmptyLinearOrder,
    NotATree,
    NotCanonical,
    VertexOutOfRange,
)

ParentArray = Sequence[Optional[int]]

LT, EQ, GT = -1, 0, 1


def _validate_raw_tree(parent: ParentArray) -> None:
    """Check that ``parent`` encodes some tree (root unique, refs in range, acyclic)."""
    n = len(parent)
    if n == 0:
        raise NotATree("empty parent array")
    roots = [i for i, p in enumerate(parent) if p is None]
    if len(roots) != 1:
        raise NotATree(f"expected exactly one root, found {len(roots)}")
    for i, p in enumerate(parent):
        if p is None:
            continue
        if not isinstance(p, int) or not (0 <= p < n):
            raise NotATree(f"parent of {i} out of range: {p!r}")
        if p == i:
            raise NotATree(f"vertex {i} is its own parent")
    # Cycle check: climbing from any vertex must reach the root in < n steps.
    for i in range(n):
        v, steps = i, 0
        while parent[v] is not None:
            v = parent[v]
            steps += 1
            if steps >= n:
                raise NotATree("cycle detected")


def _raw_children(parent: ParentArray) -> list[list[int]]:
    ch: list[list[int]] = [[] for _ in parent]
    for i, p in enumerate(parent):
        if p is not None:
            ch[p].append(i)  # index order = sibling order
    return ch


def _raw_ancestors(parent: ParentArray, v: int) -> list[int]:
    """Predecessor chain of v, root first, v last."""
    chain = [v]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    return chain


def raw_meet(parent: ParentArray, v: int, w: int) -> int:
    """Largest common predecessor of v and w in an arbitrary parent-array tree."""
    av, aw = _raw_ancestors(parent, v), _raw_ancestors(parent, w)
    m = av[0]
    for x, y in zip(av, aw):
        if x != y:
            break
        m = x
    return m


def raw_lex_compare(parent: ParentArray, v: int, w: int) -> int:
    """Two-clause lexicographic comparison on an arbitrary parent-array tree.

    Sibling order is index order.  Returns LT/EQ/GT.  This is the definitional
    comparison; on canonical trees it agrees with integer comparison.
    """
    n = len(parent)
    if not (0 <= v < n and 0 <= w < n):
        raise VertexOutOfRange(f"vertex out of range: {v}, {w}")
    if v == w:
        return EQ
    av, aw = _raw_ancestors(parent, v), _raw_ancestors(parent, w)
    if v in aw:  # v is a predecessor of w
        return LT
    if w in av:
        return GT
    m = raw_meet(parent, v, w)
    im = len(_raw_ancestors(parent, m))  # child of m on each chain sits at index im
    cv, cw = av[im], aw[im]
    return LT if cv < cw else GT


@dataclass(frozen=True)
class OrderedTree:
    """Canonical ordered tree: parent array in preorder, ``parent[i] < i``."""

    parent: tuple[Optional[int], ...]

    def __post_init__(self):
        parent = self.parent
        n = len(parent)
        if n == 0:
            raise NotATree("trees are non-empty")
        if parent[0] is not None:
            raise NotCanonical("vertex 0 must be the root")
        for i in range(1, n):
            p = parent[i]
            if not isinstance(p, int) or not (0 <= p < i):
                raise NotCanonical(f"parent[{i}] = {p!r} must be an int < {i}")
        # Index order is preorder iff each vertex attaches to the rightmost path.
        for i in range(1, n - 1):
            p = parent[i + 1]
            v = i
            while v is not None and v != p:
                v = parent[v]
            if v != p:
                raise NotCanonical(f"vertex {i + 1} does not attach to the rightmost path")

    @property
    def n(self) -> int:
        return len(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    def __repr__(self) -> str:
        return f"OrderedTree({list(self.parent)})"

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c) for c in _raw_children(self.parent))

    @cached_property
    def anc_mask(self) -> tuple[int, ...]:
        """Bitmask of predecessors (incl. self) per vertex; bit v of anc_mask[w] = v below w."""
        masks = [0] * self.n
        for i, p in enumerate(self.parent):
            masks[i] = (1 << i) | (masks[p] if p is not None else 0)
        return tuple(masks)

    @cached_property
    def height(self) -> tuple[int, ...]:
        """1-based height: ht(v) = number of predecessors including v."""
        ht = [0] * self.n
        for i, p in enumerate(self.parent):
            ht[i] = 1 + (ht[p] if p is not None else 0)
        return tuple(ht)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        has_child = [False] * self.n
        for p in self.parent[1:]:
            has_child[p] = True
        return tuple(v for v in range(self.n) if not has_child[v])

    def below(self, v: int, w: int) -> bool:
        """Tree order: v a predecessor of w (reflexive)."""
        return bool((self.anc_mask[w] >> v) & 1)

    def meet(self, v: int, w: int) -> int:
        """The largest common predecessor of v and w."""
        self._check(v)
        self._check(w)
        common = self.anc_mask[v] & self.anc_mask[w]
        return common.bit_length() - 1

    def lex_compare(self, v: int, w: int) -> int:
        """Definitional lexicographic comparison (LT/EQ/GT); equals integer order here."""
        self._check(v)
        self._check(w)
        return raw_lex_compare(self.parent, v, w)

    def ancestors(self, v: int) -> list[int]:
        self._check(v)
        return _raw_ancestors(self.parent, v)

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} not in tree of size {self.n}")


def tree(parent: Iterable[Optional[int]]) -> OrderedTree:
    return OrderedTree(tuple(parent))


def chain(n: int) -> OrderedTree:
    """The chain tree on n vertices (the linear order [n] viewed as a tree)."""
    if n < 1:
        raise EmptyLinearOrder("chains need at least one vertex")
    return OrderedTree((None,) + tuple(range(n - 1)))


def canonicalize(parent: ParentArray) -> tuple[OrderedTree, tuple[int, ...]]:
    """Relabel an arbitrary parent-array tree into canonical preorder form.

    Sibling order of the input is child-list order, i.e. increasing vertex id.
    Returns the canonical tree and the permutation old id -> new id.
    """
    _validate_raw_tree(parent)
    n = len(parent)
    ch = _raw_children(parent)
    root = next(i for i, p in enumerate(parent) if p is None)
    order: list[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(ch[v]))
    perm = [0] * n  # old -> new
    for new, old in enumerate(order):
        perm[old] = new
    new_parent: list[Optional[int]] = [None] * n
    for old in range(n):
        p = parent[old]
        if p is not None:
            new_parent[perm[old]] = perm[p]
    return OrderedTree(tuple(new_parent)), tuple(perm)


def is_canonical(parent: ParentArray) -> bool:
    try:
        OrderedTree(tuple(parent))
        return True
    except (NotATree, NotCanonical):
        return False


def initial_subtree(t: OrderedTree, v: int) -> OrderedTree:
    """T^v = all vertices lexicographically below-or-equal v, as a canonical tree.

    In the canonical encoding this is literally the prefix 0..v, and the
    inclusion back into T is the identity on ids.
    """
    t._check(v)
    return OrderedTree(t.parent[: v + 1])


@dataclass(frozen=True)
class OrderedForest:
    """Ordered forest: a canonical tree with the root removed (may be empty).

    ``parent[i] is None`` marks component minima; adding a fresh root below
    everything must give a canonical OrderedTree, so components are index
    intervals and index order is the forest's lexicographic order.
    """

    parent: tuple[Optional[int], ...]

    def __post_init__(self):
        for i, p in enumerate(self.parent):
            if p is not None and (not isinstance(p, int) or not (0 <= p < i)):
                raise NotCanonical(f"forest parent[{i}] = {p!r} must be None or an int < {i}")
        one_plus(self)  # raises NotCanonical if the rooted version is not canonical

    @property
    def n(self) -> int:
        return len(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    def __repr__(self) -> str:
        return f"OrderedForest({list(self.parent)})"

    @cached_property
    def height(self) -> tuple[int, ...]:
        ht = [0] * self.n
        for i, p in enumerate(self.parent):
            ht[i] = 1 + (ht[p] if p is not None else 0)
        return tuple(ht)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex intervals of the components, in order."""
        if self.n == 0:
            return ()
        starts = [i for i, p in enumerate(self.parent) if p is None]
        bounds = starts + [self.n]
        return tuple(tuple(range(a, b)) for a, b in zip(bounds, bounds[1:]))

    @cached_property
    def minima(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parent) if p is None)

    def max_height(self) -> int:
        return max(self.height, default=0)

    def parent_of(self, v: int) -> Optional[int]:
        if not (0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} not in forest of size {self.n}")
        return self.parent[v]


def forest(parent: Iterable[Optional[int]]) -> OrderedForest:
    return OrderedForest(tuple(parent))


def point_forest(k: int) -> OrderedForest:
    """Forest of k pairwise incomparable points."""
    return OrderedForest((None,) * k)


def one_plus(f: OrderedForest | tuple) -> OrderedTree:
    """1 + F: the tree obtained by adding a fresh root below the forest."""
    parent = f.parent if isinstance(f, OrderedForest) else tuple(f)
    shifted: list[Optional[int]] = [None]
    for p in parent:
        shifted.append(0 if p is None else p + 1)
    return OrderedTree(tuple(shifted))


def drop_root(t: OrderedTree) -> OrderedForest:
    """The forest T minus its root (inverse of one_plus)."""
    out: list[Optional[int]] = []
    for p in t.parent[1:]:
        out.append(None if p == 0 else p - 1)
    return OrderedForest(tuple(out))


@dataclass(frozen=True)
class LinearOrder:
    """The linear order on {0..size-1}; as a tree it is the chain."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise EmptyLinearOrder("negative size")

    def as_tree(self) -> OrderedTree:
        if self.size == 0:
            raise EmptyLinearOrder("the empty order is not a tree")
        return chain(self.size)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))


def _as_size(x: Union[int, LinearOrder]) -> int:
    return x.size if isinstance(x, LinearOrder) else int(x)


def attach(
    t: OrderedTree,
    points: Sequence[int],
    forests: Sequence[OrderedForest],
) -> tuple[OrderedTree, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(T; x_1..x_n) + (F_1..F_n): graft each forest above its attach point.

    The minima of F_i become immediate successors of x_i, placed after the
    existing successors so that F_i is a final interval among the vertices
    above x_i.  Returns the canonical result together with the embedding of T
    and of each F_i into it (as value tuples).
    """
    if len(points) != len(forests):
        raise ValueError("points and forests must have equal length")
    if len(set(points)) != len(points):
        raise DuplicateAttachPoint(f"attach points must be distinct: {points}")
    for x in points:
        t._check(x)
    # Build a raw parent array: T's vertices keep ids, forests appended.
    raw: list[Optional[int]] = list(t.parent)
    blocks: list[list[int]] = []
    for x, f in zip(points, forests):
        base = len(raw)
        blocks.append([base + i for i in range(f.n)])
        for p in f.parent:
            raw.append(x if p is None else base + p)
    canon, perm = canonicalize(raw)
    t_emb = tuple(perm[v] for v in range(t.n))
    f_embs = tuple(tuple(perm[v] for v in block) for block in blocks)
    return canon, t_emb, f_embs


def oplus(a: Union[int, LinearOrder], f: OrderedForest) -> OrderedTree:
    """A + F: the forest F grafted on top of the chain A.

    A must be non-empty; A + (empty forest) is the chain A itself.
    """
    size = _as_size(a)
    if size < 1:
        raise EmptyLinearOrder("the lower linear order must be non-empty")
    parent: list[Optional[int]] = [None] + list(range(size - 1))
    for p in f.parent:
        parent.append(size - 1 if p is None else size + p)
    return OrderedTree(tuple(parent))


class TensorPoint(NamedTuple):
    """A vertex of S x I: a forest vertex s paired with a word t of length ht(s)."""

    s: int
    t: tuple[int, ...]


class QPoint(NamedTuple):
    """A level cut of S x I: a forest vertex s with a word u of length ht(s)-1."""

    s: int
    u: tuple[int, ...]


@dataclass(frozen=True)
class TensorIndex:
    """S x I as a canonical ordered forest plus the bidirectional vertex index."""

    base: OrderedForest
    alphabet: int
    forest: OrderedForest
    points: tuple[TensorPoint, ...]  # vertex id -> point

    @cached_property
    def vertex_of(self) -> dict[TensorPoint, int]:
        return {pt: v for v, pt in enumerate(self.points)}


def _tensor_order(s: OrderedForest, k: int) -> list[TensorPoint]:
    """Vertices of S x I in their linear order.

    The order is the preorder of the tensor forest in which the letter
    successor (s, t with last letter incremented) precedes the fan-out
    successors (s', t + (0,)), the latter ascending in S.  This is the unique
    ordered-forest order in which every block {(s, u + (i,)) : i in I} is an
    interval ascending in the letter, which makes the identification with
    Q(S, I) x I an isomorphism of linear orders.
    """
    children_s: list[list[int]] = [[] for _ in range(s.n)]
    for v in range(s.n):
        p = s.parent[v]
        if p is not None:
            children_s[p].append(v)
    out: list[TensorPoint] = []

    def visit(v: int, word: tuple[int, ...]) -> None:
        out.append(TensorPoint(v, word))
        if word[-1] + 1 < k:
            visit(v, word[:-1] + (word[-1] + 1,))
        for c in children_s[v]:
            visit(c, word + (0,))

    for m in range(s.n):
        if s.parent[m] is None:
            visit(m, (0,))
    return out


def tensor(s: OrderedForest, i: Union[int, LinearOrder]) -> TensorIndex:
    """Fan out the forest S along the alphabet I.

    Vertices are pairs (s, t) with ht(s) = |t|; (s1,t1) lies below (s2,t2) when
    s1 is below s2, the words agree strictly below level ht(s1), and at level
    ht(s1) the letters compare in I.  The linear order makes each block
    {(s, u + (i,))} an ascending interval (see _tensor_order).
    """
    return _tensor_cached(s, _as_size(i))


@lru_cache(maxsize=None)
def _tensor_cached(s: OrderedForest, k: int) -> TensorIndex:
    if k < 1:
        raise EmptyAlphabet("alphabet must be non-empty")
    pts = _tensor_order(s, k)
    pos = {pt: idx for idx, pt in enumerate(pts)}
    parent: list[Optional[int]] = []
    for pt in pts:
        v, word = pt
        if word[-1] > 0:
            par = TensorPoint(v, word[:-1] + (word[-1] - 1,))
        elif s.parent[v] is not None:
            par = TensorPoint(s.parent[v], word[:-1])
        else:
            parent.append(None)
            continue
        parent.append(pos[par])
    out = OrderedForest(tuple(parent))
    assert out.n == sum(k ** s.height[v] for v in range(s.n))
    return TensorIndex(s, k, out, tuple(pts))


@dataclass(frozen=True)
class QIndex:
    """The level-cut index Q(S, I) with its linear order and the Q x I identification."""

    base: OrderedForest
    alphabet: int
    points: tuple[QPoint, ...]  # position in the linear order -> point

    @cached_property
    def position_of(self) -> dict[QPoint, int]:
        return {pt: idx for idx, pt in enumerate(self.points)}

    @property
    def order(self) -> LinearOrder:
        return LinearOrder(len(self.points))

    def to_tensor_point(self, q: QPoint, letter: int) -> TensorPoint:
        if not (0 <= letter < self.alphabet):
            raise VertexOutOfRange(f"letter {letter} outside alphabet of size {self.alphabet}")
        return TensorPoint(q.s, q.u + (letter,))

    def from_tensor_point(self, pt: TensorPoint) -> tuple[QPoint, int]:
        return QPoint(pt.s, pt.t[:-1]), pt.t[-1]


def q_set(s: OrderedForest, i: Union[int, LinearOrder]) -> QIndex:
    """Q(S, I) = pairs (s, u) with ht(s) = |u| + 1, ordered by block position in S x I."""
    return _q_set_cached(s, _as_size(i))


@lru_cache(maxsize=None)
def _q_set_cached(s: OrderedForest, k: int) -> QIndex:
    if k < 1:
        raise EmptyAlphabet("alphabet must be non-empty")
    pts = [QPoint(p.s, p.t[:-1]) for p in _tensor_order(s, k) if p.t[-1] == 0]
    return QIndex(s, k, tuple(pts))


@lru_cache(maxsize=None)
def _trees_of_size(n: int) -> tuple[OrderedTree, ...]:
    if n < 1:
        return ()
    if n == 1:
        return (OrderedTree((None,)),)
    results: list[OrderedTree] = []
    parent: list[Optional[int]] = [None] * n

    def extend(i: int, rightmost: tuple[int, ...]) -> None:
        if i == n:
            results.append(OrderedTree(tuple(parent)))
            return
        for p in rightmost:  # ascending => lexicographic order on parent arrays
            parent[i] = p
            extend(i + 1, tuple(x for x in rightmost if x <= p) + (i,))

    extend(1, (0,))
    return tuple(results)


def enum_trees(n: int) -> Iterable[OrderedTree]:
    """All canonical ordered trees with exactly n vertices, in lexicographic order."""
    if n < 1:
        raise VertexOutOfRange("trees are non-empty; need n >= 1")
    return iter(_trees_of_size(n))


def all_trees(n: int) -> tuple[OrderedTree, ...]:
    if n < 1:
        raise VertexOutOfRange("trees are non-empty; need n >= 1")
    return _trees_of_size(n)


def all_forests(n: int) -> tuple[OrderedForest, ...]:
    """All ordered forests on n vertices (roots of (n+1)-vertex trees removed)."""
    if n < 0:
        raise VertexOutOfRange("forest size must be >= 0")
    return tuple(drop_root(t) for t in _trees_of_size(n + 1))
