#!/usr/bin/env python3
"""Canonical ordered trees: encodings, orders, and constructions.

An ordered tree is stored as a parent array whose indices already realize the
lexicographic (preorder) order, so structural equality is tree equality and
the tree order is the ancestor relation.  This script walks through the
encoding, the canonicalization of arbitrary input, meets, initial subtrees,
and the grafting constructions.
"""

from treeramsey import trees

print("== encoding ==")
y = trees.tree([None, 0, 0])
c3 = trees.chain(3)
print(f"the two 3-vertex trees: fork {list(y.parent)}, chain {list(c3.parent)}")
print(f"fork heights {y.height}, leaves {y.leaves}")

print("\n== canonicalization ==")
raw = [None, 0, 0, 1]  # vertex 3 hangs under 1, so index order is not preorder
canon, perm = trees.canonicalize(raw)
print(f"{raw} relabels to {list(canon.parent)} via old->new {perm}")
again, perm2 = trees.canonicalize(canon.parent)
print(f"idempotent: {again == canon}, permutation {perm2}")

print("\n== meets and the lexicographic order ==")
print(f"fork: meet(1,2) = {y.meet(1, 2)}   chain: meet(1,2) = {c3.meet(1, 2)}")
print("on the non-canonical input, the definitional comparison still works:")
print(f"  lex_compare(3,2) on {raw} = {trees.raw_lex_compare(raw, 3, 2)}  (-1 means <)")

print("\n== initial subtrees are prefixes ==")
t = trees.tree([None, 0, 1, 0])
for v in range(t.n):
    print(f"  T^{v} = {list(trees.initial_subtree(t, v).parent)}")

print("\n== grafting ==")
pt = trees.point_forest(1)
out, emb_t, emb_f = trees.attach(trees.chain(2), [0, 1], [pt, pt])
print(f"attach single points at both chain vertices: {list(out.parent)}")
print(f"  the chain lands at {emb_t}, the grafted points at {emb_f}")
print(f"chain plus forest: 2 + (one point) = {list(trees.oplus(2, pt).parent)}")
print(f"1 + (two points) = the fork: {list(trees.oplus(1, trees.point_forest(2)).parent)}")

print("\n== enumeration ==")
for n in range(1, 7):
    print(f"  {len(trees.all_trees(n))} ordered trees on {n} vertices")
