"""Characteristic polynomials three ways: Moebius sums, exponents, and point counts."""

# %%
from psiarr import (
    PsiGraph,
    build_affine,
    characteristic_polynomial,
    cone,
    count_complement_points,
    exponents_from_order,
    integer_root_factorization,
    interpolate_count_polynomial,
    psi_elimination_order,
)
from psiarr.polynomial import format_factored

g = PsiGraph.build(3, [(0, 1), (1, 2)], {0: [1, 2], 1: [1]})
A = build_affine(g)
chi = characteristic_polynomial(A)
print("chi(t) =", chi, "=", format_factored(integer_root_factorization(chi)))
print("cone:   ", characteristic_polynomial(cone(A)))

# %%
# For a supersolvable instance the roots are read off the elimination order.
report = exponents_from_order(g, psi_elimination_order(g))
print("exponents", report.exponents, "match:", report.polynomial_match)

# %%
# Over a prime field the complement has chi(q) points.
for q in (5, 7, 11):
    print(q, count_complement_points(A, q), chi(q))
print("interpolated:", interpolate_count_polynomial(A, [5, 7, 11, 13]))

# %%
# An edge with incomparable labels: the polynomial has no integer roots.
e = build_affine(PsiGraph.build(2, [(0, 1)], {0: [1], 1: [2]}))
chi = characteristic_polynomial(e)
print(chi, integer_root_factorization(chi))
