#!/usr/bin/env python3
"""Deciding and searching Ramsey witness trees by brute force.

A tree U is a witness for (b, S, T) if every b-coloring of the rigid
surjections U -> S leaves some composite family {f o g0} monochromatic.  The
decision is a hypergraph coloring search with a replayable verdict; the
search scans candidates in enumeration order.
"""

from treeramsey import serialize, trees
from treeramsey import witness as wit

C1, C2, C3 = trees.chain(1), trees.chain(2), trees.chain(3)

print("== single decisions ==")
rep = wit.check_witness_mn(2, C2, C2, C2)
print(f"S=T=U=[2], b=2: {rep.verdict} (the only edge is a singleton)")
rep = wit.check_witness_mn(2, C2, C3, C3)
print(f"S=[2], T=U=[3], b=2: {rep.verdict}; defeating coloring {rep.counterexample}")
print(f"  replay through the plain checker: {wit.replay_report(rep)}")

print("\n== chain numbers ==")
for l, cap in [(2, 4), (3, 7)]:
    u, rep = wit.search_witness(2, C2, trees.chain(l), mode="chain", max_vertices=cap)
    print(f"b=2, k=2, l={l}: minimal m = {u.n} "
          f"({rep.stats.vertices} colored maps, {rep.stats.edges} edges)")

print("\n== serialized reports replay ==")
payload = serialize.report_to_json(rep)
rep2 = serialize.report_from_json(payload)
print(f"round trip intact: {serialize.report_to_json(rep2) == payload}")

print("\n== sealed variant and the assembly ==")
s_plus, s_new = wit.assemble_plus(C2)
print(f"[2] with one extra top successor of the root: {list(s_plus.parent)} (new vertex {s_new})")
sealed_witness, _ = wit.search_witness(2, s_plus, s_plus, mode="sealed", max_vertices=5)
print(f"sealed witness for (b=2, {list(s_plus.parent)}, same): {list(sealed_witness.parent)}")
assembled, final = wit.derive_mn_from_sealed(2, C2, C2, sealed_witness)
print(f"assembled plain witness: {list(assembled.parent)} -> {final.verdict}")

asm = wit.assemble_V(sealed_witness)
print(f"assembly detail: leaves {asm.leaves}, projections "
      f"{ {y: list(pi.values) for y, pi in asm.projections.items()} }")
