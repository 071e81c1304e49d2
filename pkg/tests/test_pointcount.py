from fractions import Fraction as F
from itertools import product

import pytest

from psiarr.arrangement import Arrangement, Hyperplane, build_affine, cone
from psiarr.lattice import characteristic_polynomial
from psiarr.pointcount import count_complement_points, interpolate_count_polynomial
from psiarr.polynomial import IntPolynomial


def naive_count(a, q):
    """Every point of F_q^d tested against every hyperplane."""
    planes = []
    for h in a.hyperplanes:
        inv = lambda c: c.numerator * pow(c.denominator, -1, q) % q
        planes.append(([inv(c) for c in h.coefficients], inv(h.constant)))
    return sum(
        all(sum(c * x for c, x in zip(cs, pt)) % q != b for cs, b in planes)
        for pt in product(range(q), repeat=a.dimension)
    )


def test_fiber_count_matches_naive(p3psi, split_edge, c4):
    for g in (p3psi, split_edge, c4):
        for a in (build_affine(g), cone(build_affine(g))):
            for q in (5, 7):
                assert count_complement_points(a, q) == naive_count(a, q)


def test_rational_and_general_planes():
    a = Arrangement(
        3,
        (
            Hyperplane.of([1, 2, 3], F(1, 2)),
            Hyperplane.of([0, 1, -1], 0),
            Hyperplane.of([1, 0, 0], F(2, 3)),
            Hyperplane.of([2, 1, 0], 1),
        ),
    )
    for q in (5, 7, 11):
        assert count_complement_points(a, q) == naive_count(a, q)


@pytest.mark.parametrize(
    "graph,expected",
    [
        ("k3", [0, 2, -3, 1]),
        ("p3psi", [-4, 8, -5, 1]),
        ("split_edge", [3, -3, 1]),
        ("c4", [0, -3, 6, -4, 1]),
    ],
)
def test_interpolated_golden_polynomials(graph, expected, request):
    a = build_affine(request.getfixturevalue(graph))
    assert interpolate_count_polynomial(a, [5, 7, 11, 13, 17]) == IntPolynomial(expected)


def test_agrees_with_lattice_at_large_q(p3psi, k3):
    for g in (p3psi, k3):
        a = build_affine(g)
        chi = characteristic_polynomial(a)
        for q in (101, 103, 107):
            assert count_complement_points(a, q) == chi(q)


def test_errors():
    a = Arrangement(1, (Hyperplane.of([1], F(1, 5)),))
    with pytest.raises(ValueError):
        count_complement_points(a, 5)
    with pytest.raises(ValueError):
        count_complement_points(a, 9)
    with pytest.raises(ValueError):
        interpolate_count_polynomial(a, [7])


def test_dimension_zero():
    assert count_complement_points(Arrangement(0, ()), 7) == 1
