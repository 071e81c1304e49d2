from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in ``t``; ``coefficients[k]`` multiplies ``t**k``."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial([])
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def divide_linear(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by ``t - root``: (quotient, remainder)."""
        if self.degree < 1:
            return IntPolynomial([]), self(root)
        high = list(reversed(self.coefficients))
        quot = [high[0]]
        for c in high[1:-1]:
            quot.append(c + root * quot[-1])
        rem = high[-1] + root * quot[-1]
        return IntPolynomial(reversed(quot)), rem

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def format_factored(roots: Sequence[int]) -> str:
    """``t(t-1)(t-2)^2`` style product of ``(t - r)`` over the given roots."""
    if not roots:
        return "1"
    out = []
    for r, k in sorted(Counter(roots).items()):
        base = "t" if r == 0 else f"(t-{r})"
        out.append(base if k == 1 else f"{base}^{k}")
    return "".join(out)


def integer_root_factorization(p: IntPolynomial) -> Optional[list[int]]:
    """Roots of ``p`` as a sorted list when ``p`` is a product of ``t - r`` with
    every ``r`` a nonnegative integer, else ``None``."""
    if not p.is_monic():
        raise ValueError(f"expected a monic polynomial, got {p}")
    roots: list[int] = []
    while p.degree > 0 and p.coefficients[0] == 0:
        p, _ = p.divide_linear(0)
        roots.append(0)
    if p.degree > 0:
        const = abs(p.coefficients[0])
        small = [d for d in range(1, isqrt(const) + 1) if const % d == 0]
        for r in sorted(set(small) | {const // d for d in small}):
            while p.degree > 0:
                q, rem = p.divide_linear(r)
                if rem != 0:
                    break
                p = q
                roots.append(r)
    if p.degree > 0:
        return None
    return sorted(roots)
