"""Intersection posets of arrangements over the rationals.

Flats are stored as reduced row echelon systems.  Internally every row is
kept as a primitive integer vector whose pivot is positive; that is the
reduced echelon row scaled by a positive integer, so the representation is
still canonical and comparisons stay exact without ``Fraction`` overhead in
the hot loop.  :attr:`Flat.equations` gives the usual rational rows.

Every flat also carries the bitmask of hyperplanes containing it.  For
``x <= y`` (reverse inclusion) the masks are nested, meets are mask
intersections, and joins are built by intersecting with one hyperplane at a
time through a precomputed table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .arrangement import Arrangement
from .polynomial import IntPolynomial

DEFAULT_MAX_FLATS = 100_000

_UNKNOWN = -2
_EMPTY = -1

IntRow = tuple[int, ...]


class LatticeTooLarge(RuntimeError):
    """Raised when an intersection poset would exceed the flat limit."""

    def __init__(self, limit: int):
        super().__init__(f"intersection poset has more than {limit} flats; refusing to build it")
        self.limit = limit


def _primitive(v: list[int], width: int) -> list[int]:
    g = reduce(gcd, v, 0)
    if g > 1:
        v = [c // g for c in v]
    lead = next((c for c in v[:width] if c != 0), 0)
    if lead < 0:
        v = [-c for c in v]
    return v


def _int_row(row: Sequence) -> IntRow:
    fr = [Fraction(c) for c in row]
    den = lcm(*(c.denominator for c in fr)) if fr else 1
    return tuple(_primitive([int(c * den) for c in fr], len(fr) - 1))


def _pivot(row: IntRow, width: int) -> int:
    for k in range(width):
        if row[k]:
            return k
    return width


def _reduce(rows: Sequence[IntRow], v: Sequence[int], width: int) -> list[int]:
    v = list(v)
    for row in rows:
        p = _pivot(row, width)
        c = v[p]
        if c:
            a = row[p]
            v = [a * vi - c * ri for vi, ri in zip(v, row)]
    return _primitive(v, width)


def _adjoin(rows: tuple[IntRow, ...], v: Sequence[int], width: int):
    """Intersect the flat ``rows`` with the hyperplane ``v``.

    Returns ``rows`` itself when the flat already lies in the hyperplane,
    ``None`` when the intersection is empty, else the new canonical rows.
    """
    r = _reduce(rows, v, width)
    q = _pivot(r, width)
    if q == width:
        return rows if r[width] == 0 else None
    new = []
    for row in rows:
        c = row[q]
        if c:
            row = tuple(_primitive([r[q] * ri - c * vi for ri, vi in zip(row, r)], width))
        new.append(row)
    new.append(tuple(r))
    new.sort(key=lambda row: _pivot(row, width))
    return tuple(new)


def _rref(equations: Iterable[Sequence], width: int):
    rows: Optional[tuple[IntRow, ...]] = ()
    for eq in equations:
        rows = _adjoin(rows, _int_row(eq), width)
        if rows is None:
            return None
    return rows


@dataclass(frozen=True)
class Flat:
    """A nonempty affine subspace given by canonical echelon equations.

    Each equation row is ``(c_1, ..., c_d, b)`` meaning ``sum(c_k x_k) = b``.
    """

    rows: tuple[IntRow, ...]
    ambient: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return self.ambient - len(self.rows)

    @property
    def equations(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for row in self.rows:
            lead = row[_pivot(row, self.ambient)]
            out.append(tuple(Fraction(c, lead) for c in row))
        return tuple(out)

    def satisfies(self, equation: Sequence) -> bool:
        """Whether the whole flat lies inside the hyperplane ``equation``."""
        r = _reduce(self.rows, _int_row(equation), self.ambient)
        return not any(r)

    def describe(self, names: Sequence[str]) -> str:
        if not self.rows:
            return "V"
        parts = []
        for eq in self.equations:
            terms = []
            for c, name in zip(eq, names):
                if c == 0:
                    continue
                mag = "" if abs(c) == 1 else str(abs(c))
                terms.append(("-" if c < 0 else "+", mag + name))
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
            parts.append(f"{text} = {eq[-1]}")
        return ", ".join(parts)


class IntersectionLattice:
    """The poset of nonempty intersections of an arrangement, ordered by
    reverse inclusion.  Element 0 is the ambient space.

    Built once, never mutated afterwards (the modularity cache aside).
    """

    def __init__(self, arrangement: Arrangement, max_flats: int = DEFAULT_MAX_FLATS):
        self.arrangement = arrangement
        d = arrangement.dimension
        self._width = d
        planes = [_int_row(h.row) for h in arrangement.hyperplanes]
        m = len(planes)
        self._planes = planes

        rows: list[tuple[IntRow, ...]] = [()]
        masks: list[int] = [0]
        basis: list[tuple[int, ...]] = [()]
        up: list[list[int]] = [[_UNKNOWN] * m]
        index = {(): 0}

        head = 0
        while head < len(rows):
            x = head
            head += 1
            mx = masks[x]
            ux = up[x]
            for h in range(m):
                if ux[h] != _UNKNOWN:
                    continue
                if mx >> h & 1:
                    ux[h] = x
                    continue
                new = _adjoin(rows[x], planes[h], d)
                if new is None:
                    ux[h] = _EMPTY
                    continue
                z = index.get(new)
                if z is None:
                    z = len(rows)
                    if z >= max_flats:
                        raise LatticeTooLarge(max_flats)
                    mz = mx | (1 << h)
                    for g in range(m):
                        if not mz >> g & 1 and not any(_reduce(new, planes[g], d)):
                            mz |= 1 << g
                    index[new] = z
                    rows.append(new)
                    masks.append(mz)
                    basis.append(basis[x] + (h,))
                    up.append([_UNKNOWN] * m)
                extra = masks[z] & ~mx
                for g in range(m):
                    if extra >> g & 1:
                        ux[g] = z

        self.elements: list[Flat] = [Flat(r, d) for r in rows]
        self.masks = masks
        self.rank: list[int] = [len(r) for r in rows]
        self._basis = basis
        self._up = up
        self._index = index
        self._by_mask = {mk: i for i, mk in enumerate(masks)}
        self.atom_of: list[int] = [up[0][h] for h in range(m)]
        self.upper_covers: list[list[int]] = []
        for x in range(len(rows)):
            self.upper_covers.append(sorted({z for z in up[x] if z >= 0 and z != x}))
        self.lower_covers: list[list[int]] = [[] for _ in rows]
        for x, ups in enumerate(self.upper_covers):
            for z in ups:
                self.lower_covers[z].append(x)
        full = (1 << m) - 1
        self.top: Optional[int] = self._by_mask.get(full) if m else 0
        self._modular: dict[int, bool] = {}

    def __len__(self):
        return len(self.elements)

    @property
    def is_central(self) -> bool:
        return self.arrangement.is_central

    @property
    def bottom(self) -> int:
        return 0

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(lower, upper)``."""
        return [(x, z) for x, ups in enumerate(self.upper_covers) for z in ups]

    def atoms(self) -> list[int]:
        return list(self.upper_covers[0])

    def coatoms(self) -> list[int]:
        if self.top is None:
            raise ValueError("poset has no top element")
        return list(self.lower_covers[self.top])

    def leq(self, x: int, y: int) -> bool:
        return self.masks[x] & ~self.masks[y] == 0

    def hyperplanes_containing(self, x: int) -> list[int]:
        mk = self.masks[x]
        return [h for h in range(len(self._planes)) if mk >> h & 1]

    def index_of(self, equations: Iterable[Sequence]) -> Optional[int]:
        """Element whose flat is exactly the subspace cut out by ``equations``."""
        rows = _rref(equations, self._width)
        if rows is None:
            return None
        return self._index.get(rows)

    def closure(self, equations: Iterable[Sequence]) -> Optional[int]:
        """Smallest flat containing the subspace cut out by ``equations``."""
        rows = _rref(equations, self._width)
        if rows is None:
            return None
        mk = 0
        for h, plane in enumerate(self._planes):
            if not any(_reduce(rows, plane, self._width)):
                mk |= 1 << h
        return self._by_mask[mk]

    def describe(self, x: int) -> str:
        return self.elements[x].describe(self.arrangement.coordinate_names())


def intersection_poset(a: Arrangement, max_flats: int = DEFAULT_MAX_FLATS) -> IntersectionLattice:
    """Close the set of hyperplanes under nonempty intersection."""
    return IntersectionLattice(a, max_flats)


def meet(L: IntersectionLattice, x: int, y: int) -> int:
    """Smallest flat containing both: cut out by the common hyperplanes."""
    return L._by_mask[L.masks[x] & L.masks[y]]


def join(L: IntersectionLattice, x: int, y: int) -> Optional[int]:
    """The intersection of ``x`` and ``y``, or ``None`` when it is empty."""
    z = x
    for h in L._basis[y]:
        z = L._up[z][h]
        if z < 0:
            return None
    return z


def _require_central(L: IntersectionLattice) -> None:
    if not L.is_central:
        raise ValueError("modularity is only defined here for central arrangements; cone first")


def is_modular(L: IntersectionLattice, x: int) -> bool:
    """``rk(x) + rk(y) == rk(x ^ y) + rk(x v y)`` for every ``y``."""
    _require_central(L)
    cached = L._modular.get(x)
    if cached is not None:
        return cached
    rank = L.rank
    rx = rank[x]
    ok = True
    for y in range(len(L)):
        if rx + rank[y] != rank[meet(L, x, y)] + rank[join(L, x, y)]:
            ok = False
            break
    L._modular[x] = ok
    return ok


def modular_maximal_chain(L: IntersectionLattice, exhaustive: bool = False) -> Optional[list[int]]:
    """A maximal chain of modular elements, bottom first, or ``None``.

    The default search descends from the top through modular coatoms of each
    interval ``[0, x]``.  ``exhaustive=True`` instead walks every maximal chain
    upward from the bottom; it is much slower and kept as a cross-check.
    """
    _require_central(L)
    if exhaustive:
        return _chain_brute_force(L)
    dead: set[int] = set()

    def descend(x: int) -> Optional[list[int]]:
        if x == 0:
            return [0]
        for c in L.lower_covers[x]:
            if c in dead or not is_modular(L, c):
                continue
            sub = descend(c)
            if sub is not None:
                return sub + [x]
            dead.add(c)
        return None

    return descend(L.top)


def _chain_brute_force(L: IntersectionLattice) -> Optional[list[int]]:
    top = L.top
    stack = [[0]]
    while stack:
        chain = stack.pop()
        x = chain[-1]
        if x == top:
            if all(is_modular(L, z) for z in chain):
                return chain
            continue
        for z in reversed(L.upper_covers[x]):
            stack.append(chain + [z])
    return None


def mobius(L: IntersectionLattice) -> list[int]:
    """``mu(0, x)`` for every element ``x``."""
    order = sorted(range(len(L)), key=L.rank.__getitem__)
    masks = L.masks
    mu = [0] * len(L)
    done: list[int] = []
    for x in order:
        if x == 0:
            mu[x] = 1
        else:
            mx = masks[x]
            mu[x] = -sum(mu[y] for y in done if masks[y] & ~mx == 0)
        done.append(x)
    return mu


def characteristic_polynomial(
    a: Arrangement | IntersectionLattice, max_flats: int = DEFAULT_MAX_FLATS
) -> IntPolynomial:
    """``sum over flats x of mu(0, x) * t**dim(x)``."""
    L = a if isinstance(a, IntersectionLattice) else intersection_poset(a, max_flats)
    d = L.arrangement.dimension
    coeffs = [0] * (d + 1)
    for x, m in enumerate(mobius(L)):
        coeffs[L.elements[x].dim] += m
    return IntPolynomial(coeffs)


def to_dot(L: IntersectionLattice, name: str = "lattice") -> str:
    """Hasse diagram in Graphviz DOT; modularity flags only for central posets."""
    central = L.is_central
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for x in range(len(L)):
        label = f"r{L.rank[x]}: {L.describe(x)}"
        if central:
            label += " [modular]" if is_modular(L, x) else " [not modular]"
        label = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{x} [label="{label}"];')
    for x, z in L.covers:
        lines.append(f"  n{x} -> n{z};")
    lines.append("}")
    return "\n".join(lines) + "\n"
