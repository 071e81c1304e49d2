"""Independent reference computations used only by the tests.

None of these import the code paths they are used to check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from psiarr.psi_graph import PsiGraph


def simplicial_by_inspection(n, edges):
    E = {frozenset(e) for e in edges}
    out = set()
    for v in range(n):
        nbrs = [u for u in range(n) if frozenset((u, v)) in E]
        if all(frozenset((a, b)) in E for a, b in combinations(nbrs, 2)):
            out.add(v)
    return out


def has_induced_long_cycle(n, edges):
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    E = {frozenset(e) for e in edges}
    for k in range(4, n + 1):
        for S in combinations(range(n), k):
            deg = {v: sum(frozenset((v, u)) in E for u in S if u != v) for v in S}
            if any(d != 2 for d in deg.values()):
                continue
            seen, stack = {S[0]}, [S[0]]
            while stack:
                v = stack.pop()
                for u in S:
                    if u not in seen and frozenset((u, v)) in E:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == k:
                return True
    return False


def is_induced_chordless_cycle(n, edges, cycle):
    E = {frozenset(e) for e in edges}
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if (frozenset((cycle[i], cycle[j])) in E) != consecutive:
            return False
    return True


def valid_orders(g: PsiGraph):
    """Every order satisfying the clique and label-shrinking conditions."""
    E = {frozenset(e) for e in g.edges}
    for order in permutations(range(g.n)):
        ok = True
        for i, v in enumerate(order):
            earlier = [u for u in order[:i] if frozenset((u, v)) in E]
            if not all(frozenset((a, b)) in E for a, b in combinations(earlier, 2)):
                ok = False
                break
            if not all(g.psi[v] <= g.psi[u] for u in earlier):
                ok = False
                break
        if ok:
            yield order


def chromatic_polynomial(n, edges):
    """Deletion-contraction; coefficients low to high."""
    edges = {tuple(sorted(e)) for e in edges}
    if not edges:
        return [0] * n + [1]
    u, v = min(edges)
    deleted = edges - {(u, v)}
    # merge v into u, renumber vertices above v
    def relabel(w):
        w = u if w == v else w
        return w - 1 if w > v else w
    contracted = {tuple(sorted((relabel(a), relabel(b)))) for a, b in deleted}
    contracted = {e for e in contracted if e[0] != e[1]}
    p = chromatic_polynomial(n, deleted)
    q = chromatic_polynomial(n - 1, contracted) + [0]
    return [a - b for a, b in zip(p, q)]


def random_chordal_graph(rng: random.Random, n: int):
    """Grow by attaching each new vertex to a random clique, then shuffle labels."""
    edges = set()
    for v in range(1, n):
        cliques = [()]
        for k in range(1, v + 1):
            for S in combinations(range(v), k):
                if all(tuple(sorted(p)) in edges for p in combinations(S, 2)):
                    cliques.append(S)
        for u in rng.choice(cliques):
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return [tuple(sorted((perm[a], perm[b]))) for a, b in edges]


def line_vector(flat):
    """Spanning vector of a one-dimensional central flat."""
    d = flat.ambient
    eqs = flat.equations
    pivots = [next(k for k in range(d) if r[k] != 0) for r in eqs]
    (free,) = [k for k in range(d) if k not in pivots]
    p = [Fraction(0)] * d
    p[free] = Fraction(1)
    for r, k in zip(eqs, pivots):
        p[k] = -r[free]
    return p


def coatom_blocks(flat, n):
    """Vertex blocks of a coatom of the cone lattice.

    Vertices with equal coordinates on the line share a block; when the line
    lies in ``y = 0`` the zero coordinates form the ``y0`` block, present even
    if it holds no vertex.
    """
    p = line_vector(flat)
    py = p[n]
    groups = {}
    for i in range(n):
        key = p[i] / py if py != 0 else p[i]
        groups.setdefault(key, []).append(i)
    blocks = list(groups.values())
    if py == 0 and 0 not in groups:
        blocks.append([])
    return blocks
