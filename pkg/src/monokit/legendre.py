"""Legendre and associated Legendre polynomials, exact in the rationals.

The associated function of degree d and order m is

    P^m_d(t) = (1 - t^2)^(m/2) * d^m/dt^m P_d(t)

with NO Condon-Shortley sign.  The square root factor is irrational, so
the exact layer works with the polynomial body Q_{d,m} = d^m/dt^m P_d and
keeps the (1-t^2)^(m/2) factor symbolic; identities are then polynomial
identities with Fraction coefficients.  For m > d the body is the zero
polynomial.

Polynomials here are plain coefficient lists, index = power of t.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

Coeffs = list[Fraction]


def double_factorial(n: int) -> int:
    """n!! with the empty-product conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# -- coefficient-list helpers -------------------------------------------------

def poly_eval(coeffs: Coeffs, t: Fraction) -> Fraction:
    total = Fraction(0)
    for power, c in enumerate(coeffs):
        if c:
            total += c * t ** power
    return total


def poly_eval_float(coeffs: Coeffs, t) -> float | np.ndarray:
    t = np.asarray(t, dtype=float)
    total = np.zeros_like(t)
    for power, c in enumerate(coeffs):
        if c:
            total += float(c) * t ** power
    return total if total.shape else float(total)


def poly_deriv(coeffs: Coeffs) -> Coeffs:
    return [c * power for power, c in enumerate(coeffs)][1:]


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out

def poly_add(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def poly_scale(a: Coeffs, s) -> Coeffs:
    return [c * s for c in a]


def poly_is_zero(a: Coeffs) -> bool:
    return all(c == 0 for c in a)


def poly_integrate_sym(coeffs: Coeffs) -> Fraction:
    """Exact integral over [-1, 1]; odd powers drop out."""
    total = Fraction(0)
    for power, c in enumerate(coeffs):
        if c and power % 2 == 0:
            total += 2 * c / (power + 1)
    return total


# -- Legendre bodies ----------------------------------------------------------

@lru_cache(maxsize=None)
def legendre_coeffs(d: int) -> tuple[Fraction, ...]:
    """Coefficients of P_d(t), exact.

    P_d(t) = sum_k a_{d,k} t^(d-2k) with
    a_{d,k} = (-1)^k (2d-2k)! / (2^d k! (d-k)! (d-2k)!).
    """
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    out = [Fraction(0)] * (d + 1)
    for k in range(d // 2 + 1):
        num = (-1) ** k * math.factorial(2 * d - 2 * k)
        den = 2 ** d * math.factorial(k) * math.factorial(d - k) * math.factorial(d - 2 * k)
        out[d - 2 * k] = Fraction(num, den)
    return tuple(out)


@lru_cache(maxsize=None)
def assoc_body(d: int, m: int) -> tuple[Fraction, ...]:
    """Coefficients of Q_{d,m} = d^m/dt^m P_d; zero polynomial when m > d."""
    if m < 0:
        raise ValueError(f"order must be >= 0, got {m}")
    if m > d:
        return ()
    coeffs = list(legendre_coeffs(d))
    for _ in range(m):
        coeffs = poly_deriv(coeffs)
    return tuple(coeffs)


def legendre_float(d: int, t) -> float | np.ndarray:
    return poly_eval_float(list(legendre_coeffs(d)), t)


def assoc_legendre_float(d: int, m: int, t) -> float | np.ndarray:
    """P^m_d(t) = (1-t^2)^(m/2) Q_{d,m}(t), no Condon-Shortley sign."""
    t = np.asarray(t, dtype=float)
    body = poly_eval_float(list(assoc_body(d, m)), t)
    out = (1.0 - t * t) ** (m / 2.0) * body
    return out if np.shape(out) else float(out)


def assoc_norm_sq(d: int, m: int) -> Fraction:
    """Exact value of the integral of (P^m_d)^2 over [-1, 1].

    (1-t^2)^m Q^2 is a genuine polynomial, so this is a rational number.
    """
    body = list(assoc_body(d, m))
    one_minus_t2 = [Fraction(1), Fraction(0), Fraction(-1)]
    integrand = poly_mul(body, body)
    for _ in range(m):
        integrand = poly_mul(integrand, one_minus_t2)
    return poly_integrate_sym(integrand)


def assoc_norm_sq_closed(d: int, m: int) -> Fraction:
    """2/(2d+1) * (d+m)!/(d-m)!"""
    return Fraction(2, 2 * d + 1) * Fraction(math.factorial(d + m), math.factorial(d - m))


# -- identity residuals --------------------------------------------------------

def recurrence_residual(d: int, m: int) -> Coeffs:
    """Body-level residual of (1-t^2) d/dt P^m_d = (d+m) P^m_{d-1} - d t P^m_d.

    After dividing out (1-t^2)^(m/2) the identity reads

        (1-t^2) Q'_{d,m} - m t Q_{d,m} = (d+m) Q_{d-1,m} - d t Q_{d,m}

    and the returned list is LHS - RHS, exactly zero when the identity holds.
    """
    q_d = list(assoc_body(d, m))
    q_prev = list(assoc_body(d - 1, m))
    u = [Fraction(1), Fraction(0), Fraction(-1)]
    t = [Fraction(0), Fraction(1)]
    lhs = poly_add(poly_mul(u, poly_deriv(q_d)), poly_scale(poly_mul(t, q_d), -m))
    rhs = poly_add(poly_scale(q_prev, d + m), poly_scale(poly_mul(t, q_d), -d))
    return poly_add(lhs, poly_scale(rhs, -1))


def ode_residual_body(d: int, m: int) -> Coeffs:
    """Exact residual of the m-times differentiated Legendre equation.

    (1-t^2) Q'' - 2(m+1) t Q' + (d(d+1) - m(m+1)) Q = 0 for Q = Q_{d,m};
    this is the associated equation with the root factor divided out.
    """
    q = list(assoc_body(d, m))
    u = [Fraction(1), Fraction(0), Fraction(-1)]
    t = [Fraction(0), Fraction(1)]
    out = poly_mul(u, poly_deriv(poly_deriv(q)))
    out = poly_add(out, poly_scale(poly_mul(t, poly_deriv(q)), -2 * (m + 1)))
    out = poly_add(out, poly_scale(q, d * (d + 1) - m * (m + 1)))
    return out


def ode_residual(d: int, m: int, t: float) -> float:
    """Float residual of (1-t^2) P'' - 2t P' + (d(d+1) - m^2/(1-t^2)) P at t.

    Derivatives of the full associated function (root factor included) are
    evaluated analytically from the body and its derivatives; |t| = 1 is
    rejected because of the m^2/(1-t^2) pole.
    """
    if not -1.0 < t < 1.0:
        raise ValueError(f"need |t| < 1, got {t}")
    u = 1.0 - t * t
    q = poly_eval_float(list(assoc_body(d, m)), t)
    dq = poly_eval_float(poly_deriv(list(assoc_body(d, m))), t)
    ddq = poly_eval_float(poly_deriv(poly_deriv(list(assoc_body(d, m)))), t)
    root = u ** (m / 2.0)
    p = root * q
    g = u * dq - m * t * q
    dp = root / u * g
    dg = u * ddq - (m + 2) * t * dq - m * q
    ddp = root / (u * u) * (-(m - 2) * t * g + u * dg)
    return u * ddp - 2 * t * dp + (d * (d + 1) - m * m / u) * p
