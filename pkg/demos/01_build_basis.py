"""
Building the monogenic basis
============================

Construct the degree-n blocks of A-valued homogeneous monogenic
polynomials with exact rational quaternion coefficients, then watch the
generalized Cauchy-Riemann operator annihilate every element.
"""

from monokit import basis_for_degree, degree_indices, spherical_monogenic

# Each degree-n block has 2n + 3 elements, indexed X:0, X:1, Y:1, ..., Y:n+1.
for n in range(4):
    labels = [ix.label for ix in degree_indices(n)]
    print(f"degree {n}: {len(labels)} elements  {labels}")

# The polynomials themselves are sparse dictionaries of exact quaternions.
x01 = spherical_monogenic(1, "X", 0)
print("\nX:0 at degree 1 =", x01.poly)

# Applying D = d/dx0 + e1 d/dx1 + e2 d/dx2 gives the zero polynomial,
# exactly, with no floating point involved.
print("\nD annihilates every element up to degree 6:")
for n in range(7):
    residuals = [element.poly.dirac() for element in basis_for_degree(n)]
    assert all(r.is_zero() for r in residuals)
    print(f"  degree {n}: all {len(residuals)} images are identically zero")

# Homogeneity is visible from the exponent triples: every monomial of a
# degree-n element has total degree n.
x23 = spherical_monogenic(3, "X", 2)
degrees = {sum(exp) for exp in x23.poly.terms}
print(f"\nX:2 at degree 3 uses {len(x23.poly.terms)} monomials, "
      f"all of total degree {degrees}")
