"""Finite pigeonhole searchers and the word-to-tree transfer construction.

Everything here is a bounded search for objects the unbounded theory merely
asserts to exist: monochromatic-embedding forests, alphabet sizes for the
left-variable word lemma (single and product form), and the transfer map
pi_p: A + (S x I) -> A + S built from a word map p via leading / good /
very good points, together with the companion maps r with

    r o p^{x_v} = rho o pi_p^v.

Chains are handled positionally: A + (L x I) is the chain of size
a + l*i with the block {x} x I at positions a + x*i .. a + (x+1)*i - 1.
A sealed map onto A + 1 from an initial segment cut at y is coded as
(y_local, vals): y_local the cut position inside the block part, vals the
free values (in A) strictly between A and the cut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    NotFoundWithinBound,
    NotSealed,
    ResourceCapExceeded,
    BlockConditionViolated,
)
from .enumeration import all_embeddings, enum_colorings
from .maps import (
    TreeMap,
    check_block_condition,
    classify,
    compose,
    injection_of,
    restrict_initial,
    rigid_from_embedding,
)
from .trees import (
    OrderedForest,
    OrderedTree,
    QIndex,
    QPoint,
    TensorIndex,
    TensorPoint,
    all_forests,
    all_trees,
    one_plus,
    oplus,
    q_set,
    tensor,
)

__all__ = [
    "monochromatic_host_search",
    "SealedWord",
    "sealed_words",
    "block_condition_maps",
    "compose_sealed_word",
    "compose_plain_word",
    "hj_check",
    "hj_search",
    "hj_product_check",
    "hj_product_search",
    "PointFlags",
    "classify_point",
    "very_good_word",
    "build_pi",
    "build_r",
    "build_r_plain",
    "verify_transfer",
    "lp_pipeline",
]

DEFAULT_MAX_COLORINGS = 1 << 20


# ---------------------------------------------------------------------------
# vertex pigeonhole: monochromatic embedded copies


def _forest_embeddings(s: OrderedForest, t: OrderedForest) -> list[tuple[int, ...]]:
    """Tree embeddings between forests = embeddings of the rooted versions."""
    out = []
    for e in all_embeddings(one_plus(s), one_plus(t)):
        out.append(tuple(v - 1 for v in e.values[1:]))
    return out


def monochromatic_host_search(
    s: Union[OrderedTree, OrderedForest], b: int, max_size: int
) -> Union[OrderedTree, OrderedForest]:
    """Smallest forest/tree S' such that every b-coloring of its vertices admits an
    embedded copy of S that is monochromatic (off the root, in the tree case).

    Candidates are scanned by vertex count and then enumeration order, each
    decided by exhausting colorings (first vertex pinned); the witness
    embeddings are recomputed per coloring.
    """
    if b < 1:
        raise ValueError("need b >= 1")
    tree_mode = isinstance(s, OrderedTree)
    lo = s.n
    for n in range(lo, max_size + 1):
        candidates: Sequence = all_trees(n) if tree_mode else all_forests(n)
        for cand in candidates:
            if tree_mode:
                embeddings = [e.values for e in all_embeddings(s, cand)]
                mono_sets = [e[1:] for e in embeddings]  # the root's color never matters
            else:
                mono_sets = _forest_embeddings(s, cand)
            if not mono_sets and s.n > 0:
                continue
            good = True
            for coloring in enum_colorings(cand.n, b, pin_first=cand.n > 0):
                if not any(len({coloring[v] for v in ms}) <= 1 for ms in mono_sets):
                    good = False
                    break
            if good:
                return cand
    raise NotFoundWithinBound(f"no monochromatic-guarantee host within {max_size} vertices")


# ---------------------------------------------------------------------------
# word machinery on chains


@dataclass(frozen=True)
class SealedWord:
    """A sealed identity-on-A map from an initial segment of A + (L x I) onto A + 1.

    cut is the position inside the block part (0-based), vals the images in A
    of the positions strictly below the cut; the cut itself goes to the top.
    """

    cut: int
    vals: tuple[int, ...]


def sealed_words(a: int, length: int) -> list[SealedWord]:
    """All sealed words over a block part of the given length, in counting order."""
    out = []
    for cut in range(length):
        for vals in itertools.product(range(a), repeat=cut):
            out.append(SealedWord(cut, vals))
    return out


def block_condition_maps(a: int, l: int, i: int) -> Iterator[tuple[int, ...]]:
    """All maps A + (L x I) -> A + L with the block condition, as full value tuples."""
    choices = list(range(a))
    block_options: list[list[tuple[int, ...]]] = []
    for x in range(l):
        target = a + x
        opts = [
            blk
            for blk in itertools.product(choices + [target], repeat=i)
            if target in blk
        ]
        block_options.append(opts)
    prefix = tuple(range(a))
    for combo in itertools.product(*block_options):
        yield prefix + tuple(v for blk in combo for v in blk)


def count_block_maps(a: int, l: int, i: int) -> int:
    return ((a + 1) ** i - a**i) ** l


def _first_hit(p: Sequence[int], a: int, i: int, x: int) -> int:
    """Local position of min p^{-1}(a + x) inside the block part."""
    base = x * i
    for j in range(i):
        if p[a + base + j] == a + x:
            return base + j
    raise BlockConditionViolated(f"block {x} never hits its target")


def compose_sealed_word(
    p: Sequence[int], a: int, i: int, r: SealedWord
) -> SealedWord:
    """r o p^x for a sealed word r over A + L cut at x: a sealed word over A + (L x I)."""
    x = r.cut
    e = _first_hit(p, a, i, x)
    vals = []
    for j in range(e):
        v = p[a + j]
        vals.append(v if v < a else r.vals[v - a])
    return SealedWord(e, tuple(vals))


def compose_plain_word(p: Sequence[int], a: int, l: int, i: int, r_vals: Sequence[int]) -> tuple[int, ...]:
    """r o p for an identity-on-A map r: A + L -> A with free values r_vals on L."""
    out = []
    for j in range(l * i):
        v = p[a + j]
        out.append(v if v < a else r_vals[v - a])
    return tuple(out)


# ---------------------------------------------------------------------------
# the left-variable word lemma, single and product form


@dataclass
class HJCertificate:
    """Per-coloring witnesses: coloring index -> the word maps making colors depend
    only on the cut block."""

    i_size: int
    witnesses: list[tuple[tuple[int, ...], ...]] = field(default_factory=list)


def _tuple_objects(
    a_sizes: Sequence[int], l_sizes: Sequence[int], i: int
) -> list[tuple]:
    """The colored tuples: a sealed word in slot 0, full plain maps in later slots."""
    slot0 = sealed_words(a_sizes[0], l_sizes[0] * i)
    later = [
        list(itertools.product(range(a_sizes[k]), repeat=l_sizes[k] * i))
        for k in range(1, len(a_sizes))
    ]
    return [tuple([s0, *rest]) for s0 in slot0 for rest in itertools.product(*later)]


def _conclusion_holds(
    p_tuple: Sequence[Sequence[int]],
    a_sizes: Sequence[int],
    l_sizes: Sequence[int],
    i: int,
    color_of: dict,
) -> bool:
    """Colors of (r1 o p1^x, r2 o p2, ..., rn o pn) depend only on x."""
    n = len(a_sizes)
    later_rs = [
        list(itertools.product(range(a_sizes[k]), repeat=l_sizes[k]))
        for k in range(1, n)
    ]
    later_composites = [
        [compose_plain_word(p_tuple[k], a_sizes[k], l_sizes[k], i, rv) for rv in later_rs[k - 1]]
        for k in range(1, n)
    ]
    for x in range(l_sizes[0]):
        seen = set()
        for r_vals in itertools.product(range(a_sizes[0]), repeat=x):
            first = compose_sealed_word(p_tuple[0], a_sizes[0], i, SealedWord(x, r_vals))
            for rest in itertools.product(*later_composites):
                seen.add(color_of[(first, *rest)])
                if len(seen) > 1:
                    return False
    return True


def hj_product_check(
    a_sizes: Sequence[int],
    l_sizes: Sequence[int],
    b: int,
    i: int,
    mode: str = "direct",
    max_colorings: int = DEFAULT_MAX_COLORINGS,
) -> Optional[HJCertificate]:
    """Does alphabet size i satisfy the product word lemma for these parameters?

    direct mode searches over all tuples of block-condition maps; reduction
    mode searches only tuples obtained from a single block-condition map over
    the lexicographic product of the A's and the concatenation of the L's,
    split through coordinate projections.  Returns one witness per coloring
    with the first object's color pinned (every other coloring is a recoloring
    of a pinned one, and the conclusion is color-permutation invariant), or
    None if some coloring defeats every candidate.
    """
    if mode not in ("direct", "reduction"):
        raise ValueError("mode must be 'direct' or 'reduction'")
    objects = _tuple_objects(a_sizes, l_sizes, i)
    n_colorings = b ** max(0, len(objects) - 1)
    if n_colorings > max_colorings:
        raise ResourceCapExceeded(
            f"{n_colorings} colorings of {len(objects)} objects exceeds the cap"
        )
    candidates = list(_candidate_tuples(a_sizes, l_sizes, i, mode))
    cert = HJCertificate(i)
    for coloring in enum_colorings(len(objects), b, pin_first=True):
        color_of = dict(zip(objects, coloring))
        witness = None
        for p_tuple in candidates:
            if _conclusion_holds(p_tuple, a_sizes, l_sizes, i, color_of):
                witness = p_tuple
                break
        if witness is None:
            return None
        cert.witnesses.append(tuple(tuple(p) for p in witness))
    return cert


def _candidate_tuples(
    a_sizes: Sequence[int], l_sizes: Sequence[int], i: int, mode: str
) -> Iterator[tuple[tuple[int, ...], ...]]:
    n = len(a_sizes)
    if mode == "direct":
        families = [list(block_condition_maps(a_sizes[k], l_sizes[k], i)) for k in range(n)]
        yield from itertools.product(*families)
        return
    # reduction: a single map over (A_n x ... x A_1, L_n + ... + L_1) projected apart
    a_prod = 1
    for a in a_sizes:
        a_prod *= a
    l_total = sum(l_sizes)
    # digit extraction for the lexicographic product A_n x ... x A_1 (slot 0 varies fastest)
    def coord(value: int, k: int) -> int:
        for kk in range(k):
            value //= a_sizes[kk]
        return value % a_sizes[k]

    # block k of L' = L_n + ... + L_1 occupies l_offset[k] .. l_offset[k] + l_k - 1
    l_offset = [sum(l_sizes[kk] for kk in range(k + 1, n)) for k in range(n)]
    for p in block_condition_maps(a_prod, l_total, i):
        parts: list[tuple[int, ...]] = []
        ok = True
        for k in range(n):
            vals = list(range(a_sizes[k]))
            for x_local in range(l_sizes[k]):
                x_global = l_offset[k] + x_local
                for j in range(i):
                    v = p[a_prod + x_global * i + j]
                    if v < a_prod:
                        vals.append(coord(v, k))
                    elif v == a_prod + x_global:
                        vals.append(a_sizes[k] + x_local)
                    else:
                        ok = False  # block leaked into a foreign L, impossible under block condition
                        break
                if not ok:
                    break
            if not ok:
                break
            if not check_block_condition(vals, a_sizes[k], l_sizes[k], i):
                ok = False
                break
            parts.append(tuple(vals))
        if ok:
            yield tuple(parts)


def hj_check(
    a: int, l: int, b: int, i: int, max_colorings: int = DEFAULT_MAX_COLORINGS
) -> Optional[HJCertificate]:
    return hj_product_check([a], [l], b, i, max_colorings=max_colorings)


def hj_search(
    a: int, l: int, b: int, max_i: int, max_colorings: int = DEFAULT_MAX_COLORINGS
) -> HJCertificate:
    """Smallest alphabet size satisfying the single word lemma, with certificates."""
    for i in range(1, max_i + 1):
        cert = hj_check(a, l, b, i, max_colorings=max_colorings)
        if cert is not None:
            return cert
    raise NotFoundWithinBound(f"no alphabet size up to {max_i} works")


def hj_product_search(
    a_sizes: Sequence[int],
    l_sizes: Sequence[int],
    b: int,
    max_i: int,
    mode: str = "direct",
    max_colorings: int = DEFAULT_MAX_COLORINGS,
) -> HJCertificate:
    for i in range(1, max_i + 1):
        cert = hj_product_check(a_sizes, l_sizes, b, i, mode=mode, max_colorings=max_colorings)
        if cert is not None:
            return cert
    raise NotFoundWithinBound(f"no alphabet size up to {max_i} works")


# ---------------------------------------------------------------------------
# leading / good / very good points and the transfer maps


@dataclass(frozen=True)
class PointFlags:
    leading: bool
    good: bool
    very_good: bool


class TransferContext:
    """Shared tables for one (forest, alphabet size, A size, word map) instance.

    The word map p is a full value tuple over the chain A + (Q x I) with the
    block condition; the identification of Q x I with S x I is positional.
    """

    def __init__(self, s: OrderedForest, i_size: int, a_size: int, p: Sequence[int]):
        self.s = s
        self.i = i_size
        self.a = a_size
        self.tensor: TensorIndex = tensor(s, i_size)
        self.q: QIndex = q_set(s, i_size)
        if not check_block_condition(p, a_size, len(self.q.points), i_size):
            raise BlockConditionViolated("p does not satisfy the block condition")
        self.p = tuple(p)

    def p_at(self, tensor_pos: int) -> int:
        """Value of p at a tensor vertex: an A element (< a) or a + q position."""
        return self.p[self.a + tensor_pos]

    def q_pos(self, s_vertex: int, word: tuple[int, ...]) -> int:
        return self.q.position_of[QPoint(s_vertex, word)]

    def tensor_pos(self, s_vertex: int, word: tuple[int, ...]) -> int:
        return self.tensor.vertex_of[TensorPoint(s_vertex, word)]

    def is_leading(self, s_vertex: int, word: tuple[int, ...]) -> bool:
        q = self.q_pos(s_vertex, word[:-1])
        if self.p_at(self.tensor_pos(s_vertex, word)) != self.a + q:
            return False
        for j in range(word[-1]):
            if self.p_at(self.tensor_pos(s_vertex, word[:-1] + (j,))) == self.a + q:
                return False
        return True

    def prefixes(self, s_vertex: int, word: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
        """All (s', word') with s' below s_vertex and word' an initial segment, deepest last."""
        chain = []
        v: Optional[int] = s_vertex
        while v is not None:
            chain.append(v)
            v = self.s.parent[v]
        chain.reverse()
        return [(chain[k], word[: k + 1]) for k in range(len(chain))]

    def flags(self, s_vertex: int, word: tuple[int, ...]) -> PointFlags:
        prefixes = self.prefixes(s_vertex, word)
        proper_leading = all(self.is_leading(sv, w) for sv, w in prefixes[:-1])
        self_leading = self.is_leading(s_vertex, word)
        q = self.q_pos(s_vertex, word[:-1])
        hits = self.p_at(self.tensor_pos(s_vertex, word)) == self.a + q
        return PointFlags(
            leading=self_leading,
            good=hits and proper_leading,
            very_good=self_leading and proper_leading,
        )

    def very_good_word(self, s_vertex: int) -> tuple[int, ...]:
        """The unique word making (s, word) very good, built level by level."""
        chain = []
        v: Optional[int] = s_vertex
        while v is not None:
            chain.append(v)
            v = self.s.parent[v]
        chain.reverse()
        word: tuple[int, ...] = ()
        for sv in chain:
            q = self.q_pos(sv, word)
            for j in range(self.i):
                if self.p_at(self.tensor_pos(sv, word + (j,))) == self.a + q:
                    word = word + (j,)
                    break
            else:
                raise BlockConditionViolated(f"block at {sv} never hits its target")
        return word


def classify_point(
    s: OrderedForest, i_size: int, a_size: int, p: Sequence[int], point: tuple[int, tuple[int, ...]]
) -> PointFlags:
    ctx = TransferContext(s, i_size, a_size, p)
    return ctx.flags(point[0], tuple(point[1]))


def very_good_word(
    s: OrderedForest, i_size: int, a_size: int, p: Sequence[int], s_vertex: int
) -> tuple[int, ...]:
    return TransferContext(s, i_size, a_size, p).very_good_word(s_vertex)


def build_pi(
    s: OrderedForest, i_size: int, a_size: int, p: Sequence[int]
) -> tuple[TreeMap, TreeMap]:
    """The transfer surjection pi_p: A + (S x I) -> A + S and its injection j_p.

    pi keeps A fixed, sends a point to its forest vertex when good, to p's
    A-value when p lands in A, and to min A otherwise; j sends each forest
    vertex to its very good point.  The pair is verified to be a rigid
    surjection with that exact injection.
    """
    ctx = TransferContext(s, i_size, a_size, p)
    return _build_pi_ctx(ctx)


def _build_pi_ctx(ctx: TransferContext) -> tuple[TreeMap, TreeMap]:
    a, s = ctx.a, ctx.s
    dom = oplus(a, ctx.tensor.forest)
    cod = oplus(a, s)
    pi_vals = list(range(a))
    for pos, pt in enumerate(ctx.tensor.points):
        v = ctx.p_at(pos)
        if v < a:
            pi_vals.append(v)
        elif ctx.flags(pt.s, pt.t).good:
            pi_vals.append(a + pt.s)
        else:
            pi_vals.append(0)  # min A
    j_vals = list(range(a))
    for sv in range(s.n):
        j_vals.append(a + ctx.tensor_pos(sv, ctx.very_good_word(sv)))
    pi = TreeMap(dom, cod, tuple(pi_vals))
    j = TreeMap(cod, dom, tuple(j_vals))
    if injection_of(pi) != j:  # raises NotRigid when pi is not rigid
        raise BlockConditionViolated("transfer map's injection differs from the very-good embedding")
    return pi, j


def _r_values(ctx: TransferContext, q_prefix_len: int, rho_of) -> list:
    """Values of r on the Q part below the cut: rho(s) when some extension is very
    good, min A otherwise; rho_of is a callable so callers can pass symbols."""
    out = []
    for qq in range(q_prefix_len):
        qpt = ctx.q.points[qq]
        ext_very_good = ctx.very_good_word(qpt.s)[:-1] == qpt.u
        out.append(rho_of(qpt.s) if ext_very_good else 0)
    return out


def build_r(
    s: OrderedForest,
    i_size: int,
    a_size: int,
    p: Sequence[int],
    v: int,
    rho: TreeMap,
) -> TreeMap:
    """The sealed companion r: A + Q^{x_v} -> A + 1 with r o p^{x_v} = rho o pi_p^v.

    rho must be a sealed identity-on-A map from A + S^v onto A + 1; the
    identity is verified pointwise before returning.
    """
    ctx = TransferContext(s, i_size, a_size, p)
    a = a_size
    exp_dom = oplus(a, _forest_prefix(s, v))
    if rho.dom != exp_dom or rho.cod.n != a + 1 or not classify(rho).sealed:
        raise NotSealed("rho must be a sealed identity-on-A map from A + S^v onto A + 1")
    if any(rho.values[k] != k for k in range(a)):
        raise NotSealed("rho must fix A pointwise")
    t_v = ctx.very_good_word(v)
    x_v = ctx.q_pos(v, t_v[:-1])
    q_cut_tree = oplus(a, _chain_prefix_as_forest(len(ctx.q.points), x_v))
    r_vals = (
        list(range(a)) + _r_values(ctx, x_v, lambda sv: rho.values[a + sv]) + [a]
    )
    r = TreeMap(q_cut_tree, rho.cod, tuple(r_vals))
    # verify the transfer identity pointwise; p lives on the chain A + (Q x I),
    # pi on the tree A + (S x I), equal as linear orders, so compare values
    pi, j = _build_pi_ctx(ctx)
    p_map = _p_as_chain_map(ctx)
    left = compose(r, restrict_initial(p_map, a + x_v))
    right = compose(rho, restrict_initial(pi, a + v))
    if left.values != right.values:
        raise BlockConditionViolated("transfer identity fails")
    return r


def build_r_plain(
    s: OrderedForest, i_size: int, a_size: int, p: Sequence[int], rho: TreeMap
) -> TreeMap:
    """The companion r: A + Q -> A with r o p = rho o pi_p, for rho: A + S -> A."""
    ctx = TransferContext(s, i_size, a_size, p)
    a = a_size
    if rho.dom != oplus(a, s) or rho.cod.n != a or any(rho.values[k] != k for k in range(a)):
        raise NotSealed("rho must be an identity-on-A map from A + S to A")
    nq = len(ctx.q.points)
    r_vals = list(range(a)) + _r_values(ctx, nq, lambda sv: rho.values[a + sv])
    r = TreeMap(oplus(a, _chain_prefix_as_forest(nq, nq - 1)), rho.cod, tuple(r_vals))
    pi, _ = _build_pi_ctx(ctx)
    if compose(r, _p_as_chain_map(ctx)).values != compose(rho, pi).values:
        raise BlockConditionViolated("plain transfer identity fails")
    return r


def _p_as_chain_map(ctx: TransferContext) -> TreeMap:
    """p as a map of chains A + (Q x I) -> A + Q (the word-side view of p)."""
    from .trees import chain

    nq = len(ctx.q.points)
    return TreeMap(chain(ctx.a + nq * ctx.i), chain(ctx.a + nq), ctx.p)


def _forest_prefix(s: OrderedForest, v: int) -> OrderedForest:
    return OrderedForest(s.parent[: v + 1])


def _chain_prefix_as_forest(total: int, cut: int) -> OrderedForest:
    """The chain forest 0..cut (cut < total kept for interface clarity)."""
    assert 0 <= cut < total
    return OrderedForest((None,) + tuple(range(cut)))


TOP = object()


def verify_transfer(s: OrderedForest, i_size: int, a_size: int, p: Sequence[int]) -> None:
    """Full executable content of the transfer lemma for one word map p.

    Checks: prefix coherence of very good words; the good-implies-shared-prefix
    law; pi_p is rigid with injection j_p; and the transfer identity for every
    cut vertex v and EVERY sealed rho (and every plain rho in the uncut
    variant), decided symbolically: both sides are evaluated to expressions
    over opaque rho-values, so equality holds for all rho iff the expressions
    match (exact for |A| >= 2; |A| = 1 is compared concretely since all
    A-values collapse).  Raises AssertionError on any violation.
    """
    ctx = TransferContext(s, i_size, a_size, p)
    a = a_size
    words = {sv: ctx.very_good_word(sv) for sv in range(s.n)}
    for sv, word in words.items():
        flags = ctx.flags(sv, word)
        assert flags.very_good and flags.leading and flags.good
        parent = s.parent[sv]
        if parent is not None:  # prefix coherence along the forest order
            assert words[parent] == word[: s.height[parent]]
        # uniqueness: no other word is very good at sv
        h = s.height[sv]
        for other in itertools.product(range(i_size), repeat=h):
            if other != word:
                assert not ctx.flags(sv, other).very_good
    for pos, pt in enumerate(ctx.tensor.points):  # good => agrees with the very good word
        fl = ctx.flags(pt.s, pt.t)
        if fl.good:
            assert words[pt.s][:-1] == pt.t[:-1]
    pi, j = _build_pi_ctx(ctx)  # raises if pi is not rigid with injection j
    flags_j = classify(j)
    assert flags_j.embedding
    for pos, pt in enumerate(ctx.tensor.points):  # j o pi sits below the identity
        image = pi.values[a + pos]
        assert pi.dom.below(j.values[image], a + pos)

    def symbolic_sides(v: int) -> None:
        t_v = words[v]
        x_v = ctx.q_pos(v, t_v[:-1])
        dom_cut = a + ctx.tensor_pos(v, t_v)
        lhs = []
        rhs = []
        for w in range(dom_cut + 1):
            if w < a:
                lhs.append(w)
                rhs.append(w)
                continue
            pos = w - a
            pt = ctx.tensor.points[pos]
            pv = ctx.p_at(pos)
            # left side: r(p(w)) with r built from a symbolic sealed rho
            if pv < a:
                lhs.append(pv)
            else:
                qq = pv - a
                if qq == x_v:
                    lhs.append(TOP)
                else:
                    qpt = ctx.q.points[qq]
                    wq = words[qpt.s]
                    lhs.append(("rho", qpt.s) if wq[:-1] == qpt.u else 0)
            # right side: rho(pi(w)) with rho symbolic, sealed at v
            image = pi.values[w]
            if image < a:
                rhs.append(image)
            else:
                sv = image - a
                rhs.append(TOP if sv == v else ("rho", sv))
        if a == 1:  # all A-values and rho-values collapse to 0
            collapse = lambda t: t if t is TOP else 0
            assert [collapse(t) for t in lhs] == [collapse(t) for t in rhs], (v, lhs, rhs)
        else:
            assert lhs == rhs, (v, lhs, rhs)

    for v in range(s.n):
        symbolic_sides(v)

    # plain variant: r o p = rho o pi for symbolic rho: A + S -> A
    lhs = []
    rhs = []
    for w in range(a + ctx.tensor.forest.n):
        if w < a:
            lhs.append(w)
            rhs.append(w)
            continue
        pos = w - a
        pv = ctx.p_at(pos)
        if pv < a:
            lhs.append(pv)
        else:
            qpt = ctx.q.points[pv - a]
            wq = words[qpt.s]
            lhs.append(("rho", qpt.s) if wq[:-1] == qpt.u else 0)
        image = pi.values[w]
        rhs.append(image if image < a else ("rho", image - a))
    if a == 1:
        collapse = lambda t: 0
        assert [collapse(t) for t in lhs] == [collapse(t) for t in rhs]
    else:
        assert lhs == rhs, (lhs, rhs)


# ---------------------------------------------------------------------------
# end-to-end pigeonhole pipeline


@dataclass
class PipelineCertificate:
    """One coloring's witness bundle: the word maps, the transfer maps t_i (value
    tuples over A_i + V_i), and the single color every admissible tuple gets."""

    coloring: tuple[int, ...]
    word_maps: tuple[tuple[int, ...], ...]
    t_maps: tuple[tuple[int, ...], ...]
    color: int


@dataclass
class PipelineResult:
    i_size: int
    host: OrderedForest  # the monochromatic-guarantee replacement of the first forest
    tensors: list[TensorIndex]  # V_1 = host x I, V_k = T_k x I
    certificates: list[PipelineCertificate]


def _sealed_word_of_map(u: TreeMap, a: int) -> SealedWord:
    """Read a sealed identity-on-A map onto A + 1 back into word form."""
    cut = u.dom.n - 1 - a
    vals = u.values[a : a + cut]
    assert u.values[u.dom.n - 1] == a and all(v < a for v in vals)
    return SealedWord(cut, tuple(vals))


def _sealed_tree_map(a: int, forest_prefix: OrderedForest, vals: Sequence[int]) -> TreeMap:
    """The sealed identity-on-A map A + F^v -> A + 1 with the given free values."""
    dom = oplus(a, forest_prefix)
    from .trees import chain

    return TreeMap(dom, chain(a + 1), tuple(range(a)) + tuple(vals) + (a,))


def lp_pipeline(
    a_sizes: Sequence[int],
    forests: Sequence[OrderedForest],
    b: int,
    max_host_size: int = 8,
    max_i: int = 3,
    max_colorings: int = DEFAULT_MAX_COLORINGS,
) -> PipelineResult:
    """Produce forests V_i and, per coloring, maps t_i realizing the pigeonhole claim.

    Chain: replace the first forest by its monochromatic-guarantee host, fan
    every forest out along an alphabet found by the product word lemma (with
    the level cuts of the fanned-out forests as the letter blocks), transfer
    the word witnesses to tree maps, and compose the first with a map built
    from a monochromatic embedding.  Every certificate is verified by
    exhausting the admissible tuples.
    """
    n = len(a_sizes)
    if n != len(forests) or n == 0:
        raise ValueError("need matching non-empty parameter lists")
    if forests[0].n == 0:
        raise ValueError("the first forest must be non-empty")
    host = monochromatic_host_search(forests[0], b, max_host_size)
    assert isinstance(host, OrderedForest)
    bases = [host] + list(forests[1:])
    for i_size in range(1, max_i + 1):
        qs = [q_set(f, i_size) for f in bases]
        l_sizes = [len(q.points) for q in qs]
        objects = _tuple_objects(a_sizes, l_sizes, i_size)
        if b ** len(objects) > max_colorings:
            raise ResourceCapExceeded(
                f"{b ** len(objects)} colorings of {len(objects)} tuples exceeds the cap"
            )
        families = [list(block_condition_maps(a_sizes[k], l_sizes[k], i_size)) for k in range(n)]
        witnesses = []
        feasible = True
        for coloring in enum_colorings(len(objects), b):
            color_of = dict(zip(objects, coloring))
            found = None
            for p_tuple in itertools.product(*families):
                if _conclusion_holds(p_tuple, a_sizes, l_sizes, i_size, color_of):
                    found = p_tuple
                    break
            if found is None:
                feasible = False
                break
            witnesses.append((coloring, found))
        if not feasible:
            continue
        tensors = [tensor(f, i_size) for f in bases]
        certificates = [
            _assemble_certificate(
                a_sizes, forests, bases, tensors, i_size, objects, coloring, p_tuple
            )
            for coloring, p_tuple in witnesses
        ]
        return PipelineResult(i_size, host, tensors, certificates)
    raise NotFoundWithinBound(f"no alphabet size up to {max_i} completes the pipeline")


def _assemble_certificate(
    a_sizes: Sequence[int],
    forests: Sequence[OrderedForest],
    bases: Sequence[OrderedForest],
    tensors: Sequence[TensorIndex],
    i_size: int,
    objects: list,
    coloring: tuple[int, ...],
    p_tuple: Sequence[tuple[int, ...]],
) -> PipelineCertificate:
    n = len(a_sizes)
    a1 = a_sizes[0]
    host = bases[0]
    color_of = dict(zip(objects, coloring))
    pis = [build_pi(bases[k], i_size, a_sizes[k], p_tuple[k])[0] for k in range(n)]

    # composing any admissible tuple through the transfer maps colors host vertices
    later_choices = [
        [
            tuple(
                compose(
                    TreeMap(oplus(a_sizes[k], bases[k]), _a_chain(a_sizes[k]), tuple(range(a_sizes[k])) + tuple(rv)),
                    pis[k],
                ).values[a_sizes[k] :]
            )
            for rv in itertools.product(range(a_sizes[k]), repeat=bases[k].n)
        ]
        for k in range(1, n)
    ]
    host_color = {}
    for v in range(host.n):
        colors = set()
        pre = OrderedForest(host.parent[: v + 1])
        for s1_vals in itertools.product(range(a1), repeat=v):
            s1 = _sealed_tree_map(a1, pre, s1_vals)
            first = _sealed_word_of_map(compose(s1, restrict_initial(pis[0], a1 + v)), a1)
            for rest in itertools.product(*later_choices):
                colors.add(color_of[(first, *rest)])
        assert len(colors) == 1, "transfer failed to make the color depend on the vertex only"
        host_color[v] = colors.pop()

    embedding = next(
        e
        for e in _forest_embeddings(forests[0], host)
        if len({host_color[x] for x in e}) <= 1
    )
    e_map = TreeMap(
        oplus(a1, forests[0]),
        oplus(a1, host),
        tuple(range(a1)) + tuple(a1 + x for x in embedding),
    )
    t1 = compose(rigid_from_embedding(e_map), pis[0])
    t_maps = [t1] + pis[1:]

    # final verification: one color across every admissible composite tuple
    final_colors = set()
    later_composed = [
        [
            tuple(
                compose(
                    TreeMap(
                        oplus(a_sizes[k], forests[k]),
                        _a_chain(a_sizes[k]),
                        tuple(range(a_sizes[k])) + tuple(rv),
                    ),
                    t_maps[k],
                ).values[a_sizes[k] :]
            )
            for rv in itertools.product(range(a_sizes[k]), repeat=forests[k].n)
        ]
        for k in range(1, n)
    ]
    for w in range(forests[0].n):
        pre = OrderedForest(forests[0].parent[: w + 1])
        for s1_vals in itertools.product(range(a1), repeat=w):
            s1 = _sealed_tree_map(a1, pre, s1_vals)
            first = _sealed_word_of_map(compose(s1, restrict_initial(t1, a1 + w)), a1)
            for rest in itertools.product(*later_composed):
                final_colors.add(color_of[(first, *rest)])
    assert len(final_colors) == 1, "pipeline output is not monochromatic"
    return PipelineCertificate(
        coloring,
        tuple(tuple(p) for p in p_tuple),
        tuple(t.values for t in t_maps),
        final_colors.pop(),
    )


def _a_chain(a: int) -> OrderedTree:
    from .trees import chain

    return chain(a)


# ---------------------------------------------------------------------------
# batched verification of the transfer lemma over whole word-map families


class TransferCell:
    """Precomputed tables for one (forest, alphabet size, A size) cell.

    check_word_map re-derives the per-map structure from block hit minima:
    the very good word of a vertex is forced level by level, a point is
    leading iff its last letter is its block's first hit, and good iff p hits
    and the word below the top letter is the parent's very good word.  The
    transfer identities are decided symbolically over opaque rho-values, so
    one pass covers every sealed (and every plain) rho exactly.
    """

    def __init__(self, s: OrderedForest, i_size: int, a_size: int):
        self.s, self.i, self.a = s, i_size, a_size
        self.tensor = tensor(s, i_size)
        self.q = q_set(s, i_size)
        self.nq = len(self.q.points)
        self.n_block = self.tensor.forest.n
        self.q_of_pos = [0] * self.n_block
        self.letter_of_pos = [0] * self.n_block
        self.block_pos = [[0] * i_size for _ in range(self.nq)]
        for pos, pt in enumerate(self.tensor.points):
            qq = self.q.position_of[QPoint(pt.s, pt.t[:-1])]
            self.q_of_pos[pos] = qq
            self.letter_of_pos[pos] = pt.t[-1]
            self.block_pos[qq][pt.t[-1]] = pos
        self.chains = []
        for v in range(s.n):
            chain = []
            w: Optional[int] = v
            while w is not None:
                chain.append(w)
                w = s.parent[w]
            chain.reverse()
            self.chains.append(chain)
        self.dom_tree = oplus(a_size, self.tensor.forest)
        self.cod_tree = oplus(a_size, s) if s.n else None
        self.dom_anc = self.dom_tree.anc_mask
        m = a_size + s.n
        self.cod_meet = [[0] * m for _ in range(m)]
        cod = oplus(a_size, s)
        for x in range(m):
            for y in range(m):
                self.cod_meet[x][y] = cod.meet(x, y)

    def word_count(self) -> int:
        return count_block_maps(self.a, self.nq, self.i)

    def structure(self, p: Sequence[int]):
        """(min hit per block, very good word positions and words per vertex)."""
        a, i = self.a, self.i
        minhit = [0] * self.nq
        for qq in range(self.nq):
            target = a + qq
            for j in range(i):
                if p[a + self.block_pos[qq][j]] == target:
                    minhit[qq] = j
                    break
            else:
                raise BlockConditionViolated(f"block {qq} never hits its target")
        words = []
        vg_pos = []
        for v in range(self.s.n):
            word: tuple[int, ...] = ()
            for sv in self.chains[v]:
                qq = self.q.position_of[QPoint(sv, word)]
                word = word + (minhit[qq],)
            words.append(word)
            vg_pos.append(self.tensor.vertex_of[TensorPoint(v, word)])
        return minhit, words, vg_pos

    def check_word_map(self, p: Sequence[int], deep: bool = False) -> None:
        """Assert the full executable transfer lemma for one word map.

        With deep=True the rigidity of pi is additionally recomputed through
        the generic fiberwise-meet classifier instead of the witness checks.
        """
        a, i, s = self.a, self.i, self.s
        minhit, words, vg_pos = self.structure(p)
        for v in range(s.n):  # prefix coherence of very good words
            par = s.parent[v]
            if par is not None:
                assert words[par] == words[v][: s.height[par]]

        # pi and j from the block structure
        n = self.n_block
        pi_vals = list(range(a))
        for pos in range(n):
            pv = p[a + pos]
            if pv < a:
                pi_vals.append(pv)
                continue
            qq = pv - a
            sv = self.q.points[qq].s
            # good: hits its own block (pv == q of pos) and the word below the
            # top letter is the parent's very good word
            if qq == self.q_of_pos[pos] and self.q.points[qq].u == words[sv][:-1]:
                pi_vals.append(a + sv)
            else:
                pi_vals.append(0)
        j_vals = list(range(a)) + [a + pos for pos in vg_pos]

        # witness verification: pi o j = id, j o pi below id, j a morphism
        for x in range(a + s.n):
            assert pi_vals[j_vals[x]] == x
        anc = self.dom_anc
        for w in range(a + n):
            jw = j_vals[pi_vals[w]]
            assert (anc[w] >> jw) & 1
        for x in range(a + s.n):  # monotone + meets + root
            if x and j_vals[x - 1] >= j_vals[x]:
                raise AssertionError("injection candidate not monotone")
            for y in range(x + 1, a + s.n):
                jm = j_vals[self.cod_meet[x][y]]
                common = anc[j_vals[x]] & anc[j_vals[y]]
                assert jm == common.bit_length() - 1
        assert j_vals[0] == 0
        if deep:
            pi_map = TreeMap(self.dom_tree, oplus(a, s), tuple(pi_vals))
            j_map = injection_of(pi_map)
            assert j_map.values == tuple(j_vals)

        # transfer identity with symbolic rho, sealed variant for every cut vertex
        for v in range(s.n):
            x_v = self.q.position_of[QPoint(v, words[v][:-1])]
            dom_cut = a + vg_pos[v]
            for w in range(a, dom_cut + 1):
                pos = w - a
                pv = p[w]
                if pv < a:
                    lhs = pv
                else:
                    qq = pv - a
                    if qq == x_v:
                        lhs = TOP
                    else:
                        qpt = self.q.points[qq]
                        lhs = ("rho", qpt.s) if words[qpt.s][:-1] == qpt.u else 0
                image = pi_vals[w]
                if image < a:
                    rhs = image
                else:
                    sv = image - a
                    rhs = TOP if sv == v else ("rho", sv)
                if self.a == 1:
                    lhs = TOP if lhs is TOP else 0
                    rhs = TOP if rhs is TOP else 0
                assert lhs == rhs, (v, w, lhs, rhs)

        # plain variant over the whole domain
        for w in range(a, a + n):
            pv = p[w]
            if pv < a:
                lhs = pv
            else:
                qpt = self.q.points[pv - a]
                lhs = ("rho", qpt.s) if words[qpt.s][:-1] == qpt.u else 0
            image = pi_vals[w]
            rhs = image if image < a else ("rho", image - a)
            if self.a == 1:
                lhs, rhs = 0, 0
            assert lhs == rhs, (w, lhs, rhs)

    def reduced_family(self) -> Iterator[tuple[int, ...]]:
        """Deterministic structurally complete sample for over-budget cells.

        Every vector of block hit minima appears (those determine the very
        good structure), combined with block patterns at both membership
        extremes (single hit / all hit) plus an alternating mix, and two
        fills for the A-valued slots (constant minimum / cycling).
        """
        a, i, nq = self.a, self.i, self.nq
        fills = [lambda slot: 0, lambda slot: slot % a]
        patterns = ("single", "full", "mixed")
        for mins in itertools.product(range(i), repeat=nq):
            for pattern in patterns:
                for fill in fills:
                    vals = list(range(a))
                    for qq in range(nq):
                        full = pattern == "full" or (pattern == "mixed" and qq % 2 == 0)
                        for j in range(i):
                            if j == mins[qq] or (full and j > mins[qq]):
                                vals.append(a + qq)
                            else:
                                vals.append(fill(a * qq + j))
                    yield tuple(vals)


def verify_transfer_cell(
    s: OrderedForest,
    i_size: int,
    a_size: int,
    exhaustive_budget: int = 200_000,
    deep_every: int = 97,
) -> tuple[int, bool]:
    """Run the transfer verification over a whole (S, I, A) cell.

    Returns (maps checked, exhausted): exhausted is True when every word map
    was checked; otherwise the deterministic structurally complete family was
    used (the cell's full count exceeds the budget).  Every deep_every-th map
    is also pushed through the generic rigidity classifier.
    """
    cell = TransferCell(s, i_size, a_size)
    exhaustive = cell.word_count() <= exhaustive_budget
    source = block_condition_maps(a_size, cell.nq, i_size) if exhaustive else cell.reduced_family()
    count = 0
    for p in source:
        cell.check_word_map(p, deep=(count % deep_every == 0))
        count += 1
    return count, exhaustive
