"""Small labelled graphs with labels, and their reduction up to isomorphism."""

from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .psi_graph import PsiGraph


def labeled_graphs(n: int, connected: bool = True) -> Iterator[tuple[tuple[int, int], ...]]:
    """Edge sets of all labelled simple graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for edges in combinations(pairs, r):
            if connected and not PsiGraph.build(n, edges).is_connected():
                continue
            yield edges


def label_sets(pool: Iterable, max_size: int) -> list[tuple[Fraction, ...]]:
    values = sorted({Fraction(v) for v in pool})
    return list(chain.from_iterable(combinations(values, r) for r in range(min(max_size, len(values)) + 1)))


def psi_assignments(n: int, pool: Iterable, max_size: int) -> Iterator[tuple[tuple[Fraction, ...], ...]]:
    return product(label_sets(pool, max_size), repeat=n)


def corpus(
    max_n: int, pool: Iterable, max_size: int, min_n: int = 1, connected: bool = True
) -> Iterator[PsiGraph]:
    """Every labelled (G, psi) with ``min_n <= n <= max_n``."""
    pool = list(pool)
    for n in range(min_n, max_n + 1):
        for edges in labeled_graphs(n, connected):
            for psi in psi_assignments(n, pool, max_size):
                yield PsiGraph.build(n, edges, psi)


def canonical_form(g: PsiGraph) -> tuple:
    """Lexicographically least relabelling of (edges, labels).

    Two instances get the same form exactly when some vertex bijection maps
    edges to edges and each label set onto the image's label set.
    """
    best = None
    edges = g.sorted_edges()
    for perm in permutations(range(g.n)):
        inv = [0] * g.n
        for new, old in enumerate(perm):
            inv[old] = new
        e = tuple(sorted(tuple(sorted((inv[u], inv[v]))) for u, v in edges))
        p = tuple(tuple(sorted(g.psi[perm[i]])) for i in range(g.n))
        key = (e, p)
        if best is None or key < best:
            best = key
    return (g.n, *best) if best is not None else (0, (), ())


def from_canonical(form: tuple) -> PsiGraph:
    n, edges, psi = form
    return PsiGraph.build(n, edges, psi)


def nonisomorphic(graphs: Iterable[PsiGraph]) -> list[PsiGraph]:
    """One representative (in canonical labelling) per isomorphism class,
    sorted by canonical form."""
    forms = {canonical_form(g) for g in graphs}
    return [from_canonical(f) for f in sorted(forms, key=sort_key)]


def sort_key(form: tuple) -> tuple:
    n, edges, psi = form
    return (n, len(edges), edges, tuple((len(s), s) for s in psi))
