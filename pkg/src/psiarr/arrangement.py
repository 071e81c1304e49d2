"""Affine arrangements built from labelled graphs, and their cones."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .psi_graph import PsiGraph

AFFINE = "affine"
CONED = "coned"


@dataclass(frozen=True)
class Hyperplane:
    """The locus ``sum(c_k * x_k) == constant``, scaled so the first nonzero
    coefficient is 1."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction

    @classmethod
    def of(cls, coefficients: Sequence, constant=0) -> "Hyperplane":
        coeffs = [Fraction(c) for c in coefficients]
        constant = Fraction(constant)
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise ValueError("a hyperplane needs a nonzero coefficient")
        return cls(tuple(c / lead for c in coeffs), constant / lead)

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    @property
    def row(self) -> tuple[Fraction, ...]:
        """Coefficients followed by the constant."""
        return (*self.coefficients, self.constant)

    def contains(self, point: Sequence) -> bool:
        return sum(c * x for c, x in zip(self.coefficients, point)) == self.constant

    def describe(self, names: Sequence[str]) -> str:
        terms = []
        for c, name in zip(self.coefficients, names):
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{coef}{name}"))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} = {self.constant}"


@dataclass(frozen=True)
class Arrangement:
    dimension: int
    hyperplanes: tuple[Hyperplane, ...]
    kind: str = AFFINE
    origin: Optional[PsiGraph] = None

    def __post_init__(self):
        seen = set()
        unique = []
        for h in self.hyperplanes:
            if h.dimension != self.dimension:
                raise ValueError("hyperplane dimension does not match arrangement")
            if h not in seen:
                seen.add(h)
                unique.append(h)
        object.__setattr__(self, "hyperplanes", tuple(unique))
        if self.kind not in (AFFINE, CONED):
            raise ValueError(f"unknown arrangement kind {self.kind!r}")
        if self.kind == CONED and any(h.constant != 0 for h in self.hyperplanes):
            raise ValueError("a coned arrangement must be central")

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    @property
    def is_central(self) -> bool:
        return self.kind == CONED or all(h.constant == 0 for h in self.hyperplanes)

    def coordinate_names(self) -> list[str]:
        if self.kind == CONED:
            return [f"x{i + 1}" for i in range(self.dimension - 1)] + ["y"]
        return [f"x{i + 1}" for i in range(self.dimension)]

    def describe(self) -> list[str]:
        names = self.coordinate_names()
        return [h.describe(names) for h in self.hyperplanes]


def build_affine(g: PsiGraph) -> Arrangement:
    """``x_i = x_j`` per edge (sorted), then ``x_i = a`` per label, vertex by
    vertex with labels ascending."""
    n = g.n
    planes = []
    for i, j in g.sorted_edges():
        c = [0] * n
        c[i], c[j] = 1, -1
        planes.append(Hyperplane.of(c, 0))
    for i in range(n):
        for a in sorted(g.psi[i]):
            c = [0] * n
            c[i] = 1
            planes.append(Hyperplane.of(c, a))
    return Arrangement(n, tuple(planes), AFFINE, g)


def cone(a: Arrangement) -> Arrangement:
    """Homogenize with a new last coordinate ``y`` and append ``y = 0``."""
    if a.kind != AFFINE:
        raise ValueError("only affine arrangements can be coned")
    planes = [Hyperplane.of((*h.coefficients, -h.constant), 0) for h in a.hyperplanes]
    planes.append(Hyperplane.of([0] * a.dimension + [1], 0))
    return Arrangement(a.dimension + 1, tuple(planes), CONED, a.origin)
