"""
Orthogonality on the sphere and the ball
========================================

The basis is orthogonal for the scalar inner product Sc(conj(f) g), both
over the unit sphere and over the solid ball, and the two norms differ by
the exact factor 2n + 3.  The quaternion-valued pairing is *not* diagonal;
the library reports it rather than pretending otherwise.
"""

from fractions import Fraction

import numpy as np

from monokit import (basis_for_degree, gram_matrix_ball, gram_matrix_quaternion,
                     inner_sphere, norm_sq_ball, norm_sq_sphere)

# Exact route: rational sphere moments make every pairing a Fraction times pi.
block = basis_for_degree(2)
print("scalar sphere pairings of the degree-2 block (in units of pi):")
for i, ei in enumerate(block):
    row = [inner_sphere(ei.poly, ej.poly) for ej in block]
    print(" ", [str(v) for v in row])
assert all(inner_sphere(block[i].poly, block[j].poly) == 0
           for i in range(len(block)) for j in range(len(block)) if i != j)

# Sphere norm vs ball norm: the ratio is exactly 2n + 3 for degree n.
for n in range(5):
    element = basis_for_degree(n)[0]
    ratio = norm_sq_sphere(element.poly) / norm_sq_ball(element.poly)
    assert ratio == Fraction(2 * n + 3)
    print(f"degree {n}: sphere/ball norm ratio = {ratio} = 2n+3")

# Float route: Gauss-Legendre quadrature reproduces the identity Gram matrix
# of the normalized system to machine precision.
gram = gram_matrix_ball(4)
deviation = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
print(f"\nnormalized ball Gram, degrees 0..4 ({gram.shape[0]} elements): "
      f"max |G - I| = {deviation:.2e}")

# The quaternion-valued pairing is another story: inside the degree-1 block
# the products conj(f) g keep nonzero vector parts, so only the scalar part
# is an orthogonality statement.
mixed = gram_matrix_quaternion(1)
print("\nquaternion pairing within the degree-1 block (normalized, [1,e1,e2,e3]):")
print("  <X:0, X:1> =", np.round(mixed[0, 1], 12).tolist())
print("  <X:1, Y:1> =", np.round(mixed[1, 2], 12).tolist())
print("  diagonal   =", np.round(mixed[0, 0], 12).tolist())
