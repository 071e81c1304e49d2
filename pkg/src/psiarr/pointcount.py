"""Point counts of arrangement complements over prime fields.

This is an independent check on characteristic polynomials: for a
rational arrangement with good reduction at ``q``, the number of points of
``F_q^d`` lying on no hyperplane is ``chi(q)``.  Nothing here touches the
intersection poset.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .arrangement import Arrangement
from .polynomial import IntPolynomial


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % k for k in range(2, int(q**0.5) + 1))


def _mod(c: Fraction, q: int) -> int:
    if c.denominator % q == 0:
        raise ValueError(f"coefficient {c} has no reduction modulo {q}")
    return c.numerator * pow(c.denominator, -1, q) % q


def count_complement_points(a: Arrangement, q: int) -> int:
    """Number of points of ``F_q^d`` on none of the hyperplanes of ``a``.

    Every prefix ``(x_1, ..., x_{d-1})`` is enumerated explicitly; inside each
    fiber the hyperplanes that involve ``x_d`` each rule out exactly one value,
    so the fiber contributes ``q`` minus the number of distinct ruled-out values.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime")
    d = a.dimension
    if d == 0:
        return 1
    planes = [([_mod(c, q) for c in h.coefficients], _mod(h.constant, q)) for h in a.hyperplanes]
    k = d - 1
    # int32 holds (q-1) * (q-1) * d * q comfortably for the small q used here
    dtype = np.int32 if q ** 3 * d < 2**31 else np.int64
    if k:
        grids = np.indices((q,) * k, dtype=dtype).reshape(k, -1)
    else:
        grids = np.zeros((0, 1), dtype=dtype)
    size = grids.shape[1]
    alive = np.ones(size, dtype=bool)
    forbidden = []
    for coeffs, const in planes:
        lin = np.zeros(size, dtype=dtype)
        for j in range(k):
            if coeffs[j]:
                lin += coeffs[j] * grids[j]
        last = coeffs[-1]
        if last == 0:
            if not any(coeffs):
                # reduces to 0 = const: everything or nothing
                if const == 0:
                    return 0
                continue
            alive &= (lin - const) % q != 0
        else:
            forbidden.append((const - lin) * pow(last, -1, q) % q)
    distinct = np.zeros(size, dtype=np.int64)
    for j, f in enumerate(forbidden):
        repeat = np.zeros(size, dtype=bool)
        for i in range(j):
            repeat |= forbidden[i] == f
        distinct += ~repeat
    return int((q - distinct)[alive].sum())


def interpolate_count_polynomial(a: Arrangement, primes: Sequence[int]) -> IntPolynomial:
    """Lagrange-interpolate the complement counts at ``primes`` (need at least
    ``dimension + 1`` of them)."""
    d = a.dimension
    if len(primes) < d + 1:
        raise ValueError(f"need {d + 1} primes to pin down a degree {d} polynomial")
    pts = [(q, count_complement_points(a, q)) for q in primes[: d + 1]]
    coeffs = [Fraction(0)] * (d + 1)
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("counts are not those of an integer polynomial")
    return IntPolynomial(int(c) for c in coeffs)
