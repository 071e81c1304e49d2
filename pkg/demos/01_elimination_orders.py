"""Deciding supersolvability from the graph alone.

Run with ``python demos/01_elimination_orders.py``.
"""

# %%
from psiarr import PsiGraph, chordality, nonfree_edge_witness, psi_elimination_order

# A path v1 - v2 - v3 whose labels shrink along the path.
g = PsiGraph.build(3, [(0, 1), (1, 2)], {0: [1, 2], 1: [1]}, names=["v1", "v2", "v3"])
print("chordal:", chordality(g))

cert = psi_elimination_order(g)
print("certificate order:", [g.names[v] for v in cert.order])
for step in cert.steps:
    print(f"  {g.names[step.vertex]} attaches to {sorted(g.names[u] for u in step.earlier_neighbors)}")

# %%
# Swapping the labels on the middle vertex for incomparable ones kills every order.
bad = PsiGraph.build(3, [(0, 1), (1, 2)], {0: [1], 1: [2]}, names=["v1", "v2", "v3"])
print("certificate:", psi_elimination_order(bad))
u, v = nonfree_edge_witness(bad)
print(f"incomparable labels across {bad.names[u]}-{bad.names[v]}, so the arrangement is not free")

# %%
# A 4-cycle is not chordal; the witness is a chordless cycle.
c4 = PsiGraph.build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
print(chordality(c4))
