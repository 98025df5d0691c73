#!/usr/bin/env python3
"""The two classical statements recovered from the tree formulation.

Between chains, rigid surjections are exactly the surjections whose values
grow by at most one past the running maximum; coloring a rigid surjection by
its injection turns witness statements about surjections into witness
statements about embedded copies.  Both translations are checked here.
"""

import itertools

from treeramsey import trees
from treeramsey import witness as wit
from treeramsey.enumeration import all_embeddings, all_rigid_surjections
from treeramsey.maps import compose, injection_of

C2, C3 = trees.chain(2), trees.chain(3)

print("== chains: the growth rule ==")
for vals in [(0, 0, 1), (0, 1, 0), (0, 0, 2), (0, 1, 2)]:
    growth, tree_verdict = wit.bridge_prvo(vals, 3, max(vals) + 1)
    print(f"  {vals}: growth rule {growth}, tree definition {tree_verdict}")

agree = all(
    wit.bridge_prvo(vals, 4, k) == (wit.bridge_prvo(vals, 4, k)[0],) * 2
    for k in (1, 2, 3)
    for vals in itertools.product(range(k), repeat=4)
)
print(f"the two definitions agree on every 4-chain map: {agree}")

print("\n== surjections of a tree onto a chain flatten ==")
for t in trees.all_trees(4):
    print(f"  {list(t.parent)} onto [2]: flat-order compatible = {wit.gr_compatibility(t, 2)}")

print("\n== coloring by injections ==")
u = trees.chain(4)
embs = all_embeddings(C2, u)
coloring = [e.values[1] % 2 for e in embs]  # color an embedding by its image parity
transported = wit.leeb_transport(C2, u, coloring)
print(f"{len(embs)} embeddings of [2] into [4], transported onto "
      f"{len(transported)} rigid surjections")
for g0 in all_rigid_surjections(u, C3):
    ok = wit.leeb_contract_check(C2, C3, u, coloring, g0)
    edge = {
        transported[i]
        for i, f2 in enumerate(all_rigid_surjections(u, C2))
        if any(f2.values == compose(f, g0).values for f in all_rigid_surjections(C3, C2))
    }
    print(f"  g0 = {g0.values}: contract verified {ok}"
          + (f" (edge colors {sorted(edge)})" if edge else ""))

print("\n== extraction ==")
g0 = all_rigid_surjections(u, C3)[0]
print(f"the injection extracted from {g0.values} is {injection_of(g0).values}")
