"""Building the cone lattice and searching it for a modular maximal chain."""

# %%
from psiarr import (
    PsiGraph,
    build_affine,
    cone,
    intersection_poset,
    is_modular,
    modular_maximal_chain,
    to_dot,
)

g = PsiGraph.build(3, [(0, 1), (1, 2)], {0: [1, 2], 1: [1]})
A = cone(build_affine(g))
print(A.describe())

L = intersection_poset(A)
print(f"{len(L)} flats, rank {L.rank[L.top]}")

# %%
chain = modular_maximal_chain(L)
for x in chain:
    print(f"  rank {L.rank[x]}: {L.describe(x)}  modular={is_modular(L, x)}")

# %%
# Coatoms that are not modular.
print([L.describe(x) for x in L.coatoms() if not is_modular(L, x)])

# %%
# The Hasse diagram as Graphviz source; pipe into `dot -Tsvg` to draw it.
print(to_dot(L)[:300], "...")
