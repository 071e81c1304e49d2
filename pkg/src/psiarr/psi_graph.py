"""Graphs with finite rational labels per vertex, and the elimination orders
that decide supersolvability of their arrangements."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

Edge = tuple[int, int]


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"psi values must be exact rationals, got {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class PsiGraph:
    """A simple graph on vertices ``0..n-1`` with a finite set of rationals
    attached to every vertex.

    Use :meth:`build` rather than the raw constructor; it validates and
    normalizes edges and labels.
    """

    n: int
    edges: frozenset[Edge]
    psi: tuple[frozenset[Fraction], ...]
    names: tuple[str, ...] = ()
    _adj: tuple[frozenset[int], ...] = field(
        default=(), repr=False, compare=False, hash=False
    )

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        psi: Union[Mapping[int, Iterable], Sequence[Iterable], None] = None,
        names: Optional[Sequence[str]] = None,
    ) -> "PsiGraph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm: set[Edge] = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        labels: list[frozenset[Fraction]] = [frozenset()] * n
        if psi is not None:
            items = psi.items() if isinstance(psi, Mapping) else enumerate(psi)
            for v, values in items:
                v = int(v)
                if not 0 <= v < n:
                    raise ValueError(f"psi given for vertex {v} outside 0..{n - 1}")
                labels[v] = frozenset(_as_fraction(a) for a in values)
        if names is None:
            names = tuple(f"v{i + 1}" for i in range(n))
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise ValueError("number of names does not match vertex count")
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, frozenset(norm), tuple(labels), names, tuple(frozenset(a) for a in adj))

    def __post_init__(self):
        if not self._adj:
            adj = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def delete(self, v: int) -> "PsiGraph":
        """The graph with vertex ``v`` removed; later vertices shift down by one."""
        relabel = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges if v not in (a, b)]
        psi = [self.psi[u] for u in range(self.n) if u != v]
        names = [self.names[u] for u in range(self.n) if u != v]
        return PsiGraph.build(self.n - 1, edges, psi, names)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n


def _is_clique(g: PsiGraph, vertices: Iterable[int]) -> bool:
    return all(g.adjacent(a, b) for a, b in combinations(vertices, 2))


def simplicial_vertices(g: PsiGraph, within: Optional[Iterable[int]] = None) -> set[int]:
    """Vertices whose neighbourhood is complete.

    With ``within``, work in the subgraph induced on that vertex set.
    """
    alive = set(range(g.n)) if within is None else set(within)
    return {v for v in alive if _is_clique(g, sorted(g.neighbors(v) & alive))}


@dataclass(frozen=True)
class Chordal:
    order: tuple[int, ...]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotChordal:
    cycle: tuple[int, ...]

    def __bool__(self):
        return False


def _chordless_cycle(g: PsiGraph, alive: set[int]) -> tuple[int, ...]:
    # For v with non-adjacent neighbours a, b: a shortest a-b path avoiding the
    # rest of N[v] closes a chordless cycle through v.
    best: Optional[tuple[int, ...]] = None
    for v in sorted(alive):
        nbrs = sorted(g.neighbors(v) & alive)
        for a, b in combinations(nbrs, 2):
            if g.adjacent(a, b):
                continue
            blocked = (set(nbrs) | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                u = queue.popleft()
                for w in sorted(g.neighbors(u) & alive):
                    if w not in prev and w not in blocked:
                        prev[w] = u
                        queue.append(w)
            if b not in prev:
                continue
            path = [b]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            cycle = (v, *reversed(path))
            if best is None or len(cycle) < len(best):
                best = cycle
    assert best is not None, "a graph without simplicial vertices has a chordless cycle"
    return best


def chordality(g: PsiGraph) -> Union[Chordal, NotChordal]:
    """Decide chordality by repeatedly deleting a simplicial vertex.

    A chordal verdict carries an order in which every vertex's earlier
    neighbours form a clique; otherwise a chordless cycle of length >= 4 is
    returned.
    """
    alive = set(range(g.n))
    removed: list[int] = []
    while alive:
        simp = simplicial_vertices(g, alive)
        if not simp:
            return NotChordal(_chordless_cycle(g, alive))
        v = min(simp)
        removed.append(v)
        alive.remove(v)
    return Chordal(tuple(reversed(removed)))


@dataclass(frozen=True)
class EliminationStep:
    vertex: int
    earlier_neighbors: frozenset[int]
    # for each earlier neighbour u: is psi(vertex) a subset of psi(u)
    psi_included: tuple[tuple[int, bool], ...]


@dataclass(frozen=True)
class EliminationCertificate:
    order: tuple[int, ...]
    steps: tuple[EliminationStep, ...]

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def certificate_for_order(g: PsiGraph, order: Sequence[int]) -> EliminationCertificate:
    """Record the evidence for an ordering. Does not check it; see
    :func:`verify_certificate`."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    steps = []
    for i, v in enumerate(order):
        earlier = frozenset(u for u in order[:i] if g.adjacent(u, v))
        incl = tuple((u, g.psi[v] <= g.psi[u]) for u in sorted(earlier))
        steps.append(EliminationStep(v, earlier, incl))
    return EliminationCertificate(order, tuple(steps))


def verify_certificate(g: PsiGraph, cert: EliminationCertificate) -> bool:
    """Re-derive both conditions from ``g`` alone, ignoring the recorded steps."""
    if sorted(cert.order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(cert.order)}
    for i, v in enumerate(cert.order):
        earlier = [u for u in g.neighbors(v) if pos[u] < i]
        if not _is_clique(g, earlier):
            return False
    for a, b in g.edges:
        first, second = (a, b) if pos[a] < pos[b] else (b, a)
        if not g.psi[second] <= g.psi[first]:
            return False
    return True


def _greedy_elimination(g: PsiGraph) -> tuple[list[int], set[int]]:
    alive = set(range(g.n))
    removed: list[int] = []
    while alive:
        eligible = [
            v
            for v in sorted(simplicial_vertices(g, alive))
            if all(g.psi[v] <= g.psi[u] for u in g.neighbors(v) & alive)
        ]
        if not eligible:
            break
        v = eligible[0]
        removed.append(v)
        alive.remove(v)
    return removed, alive


def psi_elimination_order(g: PsiGraph) -> Optional[EliminationCertificate]:
    """Find an order where each vertex attaches to earlier vertices along a
    clique and labels shrink along edges (earlier label contains later label).

    Greedy from the back: any simplicial vertex whose label is contained in
    every neighbour's label may go last. Returns ``None`` when the greedy
    stalls, which happens exactly when no such order exists.
    """
    removed, alive = _greedy_elimination(g)
    if alive:
        return None
    return certificate_for_order(g, reversed(removed))


def elimination_stall(g: PsiGraph) -> Optional[frozenset[int]]:
    """The vertex set left when the greedy elimination gets stuck, or ``None``
    if it succeeds."""
    _, alive = _greedy_elimination(g)
    return frozenset(alive) if alive else None


def nonfree_edge_witness(g: PsiGraph) -> Optional[Edge]:
    """First edge (in sorted order) whose endpoint labels are incomparable
    under inclusion."""
    for u, v in g.sorted_edges():
        a, b = g.psi[u], g.psi[v]
        if not (a <= b or b <= a):
            return (u, v)
    return None


def set_partitions(items: Sequence[int]):
    """All set partitions of ``items`` as tuples of frozensets."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield (frozenset([first]), *part)
        for i, block in enumerate(part):
            yield (*part[:i], block | {first}, *part[i + 1 :])


def connected_partitions(g: PsiGraph) -> list[frozenset[frozenset[int]]]:
    """Partitions of the vertex set whose blocks each induce a connected subgraph."""
    out = []
    for part in set_partitions(range(g.n)):
        if all(_block_connected(g, b) for b in part):
            out.append(frozenset(part))
    return out


def _block_connected(g: PsiGraph, block: frozenset[int]) -> bool:
    start = next(iter(block))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in (g.neighbors(u) & block) - seen:
            seen.add(w)
            stack.append(w)
    return seen == block
