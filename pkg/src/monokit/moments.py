"""Exact integrals of polynomials over the unit sphere and unit ball.

The monomial moment over the unit sphere S^2 (surface measure, total 4*pi)
is

    integral x0^a x1^b x2^c dsigma
        = 4*pi * (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!   (a, b, c all even)
        = 0                                            (otherwise)

so every polynomial integral is (rational) * pi.  All functions here
return that rational factor; multiply by pi (or math.pi) at the float
boundary.  This gives exact Gram matrices, norms and scalar products
with the single transcendental factored out.

Over the unit ball a monomial of total degree n picks up the radial
factor 1/(n+3), term by term.
"""

from __future__ import annotations

from fractions import Fraction

from .legendre import double_factorial
from .mpoly import MPoly
from .quaternion import Quaternion


def sphere_moment(a: int, b: int, c: int) -> Fraction:
    """Rational q with  integral_S x0^a x1^b x2^c dsigma = q * pi."""
    if min(a, b, c) < 0:
        raise ValueError(f"negative exponent in ({a}, {b}, {c})")
    if a % 2 or b % 2 or c % 2:
        return Fraction(0)
    num = 4 * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1)
    return Fraction(num, double_factorial(a + b + c + 1))


def ball_moment(a: int, b: int, c: int) -> Fraction:
    """Rational q with  integral_B x0^a x1^b x2^c dV = q * pi."""
    return sphere_moment(a, b, c) / (a + b + c + 3)


def _integrate(poly: MPoly, moment) -> Quaternion:
    total = Quaternion()
    for exp, coeff in poly.terms.items():
        q = moment(*exp)
        if q:
            total = total + coeff * q
    return total


def sphere_integral(poly: MPoly) -> Quaternion:
    """Quaternion q with  integral_S poly dsigma = q * pi."""
    return _integrate(poly, sphere_moment)


def ball_integral(poly: MPoly) -> Quaternion:
    return _integrate(poly, ball_moment)


def inner_sphere_h(f: MPoly, g: MPoly) -> Quaternion:
    """Quaternion-valued product: integral_S conj(f) g dsigma, over pi."""
    return sphere_integral(f.conjugate() * g)


def inner_sphere(f: MPoly, g: MPoly) -> Fraction:
    """Real product: integral_S Sc(conj(f) g) dsigma, over pi.

    Equals the sum of the four componentwise real products.
    """
    return inner_sphere_h(f, g).sc()


def inner_ball_h(f: MPoly, g: MPoly) -> Quaternion:
    return ball_integral(f.conjugate() * g)


def inner_ball(f: MPoly, g: MPoly) -> Fraction:
    return inner_ball_h(f, g).sc()


def norm_sq_sphere(f: MPoly) -> Fraction:
    return inner_sphere(f, f)


def norm_sq_ball(f: MPoly) -> Fraction:
    return inner_ball(f, f)
