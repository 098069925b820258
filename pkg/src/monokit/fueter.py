"""Fueter variables, generalized powers and Taylor expansion.

The generalized power for a multi-index gamma = (g1, g2) is the symmetrized
product

    V_gamma = (1/n!) * sum over all n! arrangements of g1 copies of z1
              and g2 copies of z2,   n = g1 + g2,

with z1 = x1 - e1 x0 and z2 = x2 - e2 x0.  It is computed by the recursion
on the last factor,

    V_gamma = (g1/n) V_(g1-1,g2) z1 + (g2/n) V_(g1,g2-1) z2,

which agrees with the literal permutation sum (kept here as a brute-force
oracle for the tests).  A homogeneous monogenic polynomial of degree n is
recovered exactly from its n+1 Taylor coefficients

    c_gamma = (1/(g1! g2!)) d^g1/dx1 d^g2/dx2 f at 0,
    f = sum_gamma V_gamma c_gamma   (coefficients on the right).

closed_form_taylor evaluates the printed parity-gated coefficient formulas
for the X family; like the axial expansion in the basis module they depend
on the ambiguous beta coefficient and are diff material, not a source of
truth.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .basis import beta_coefficient
from .mpoly import MPoly, Z1, Z2
from .quaternion import Quaternion


@dataclass(frozen=True)
class FueterPower:
    gamma: tuple[int, int]
    poly: MPoly


@dataclass(frozen=True)
class TaylorCoeffs:
    """All n+1 coefficients of a homogeneous degree-n polynomial."""

    n: int
    coeffs: dict[tuple[int, int], Quaternion]

    def __getitem__(self, gamma: tuple[int, int]) -> Quaternion:
        return self.coeffs[gamma]

    def items(self):
        return sorted(self.coeffs.items())


@lru_cache(maxsize=None)
def fueter_power(g1: int, g2: int) -> FueterPower:
    if g1 < 0 or g2 < 0:
        raise ValueError(f"negative multi-index ({g1}, {g2})")
    n = g1 + g2
    if n == 0:
        return FueterPower((0, 0), MPoly.one())
    poly = MPoly.zero()
    if g1:
        poly = poly + Fraction(g1, n) * (fueter_power(g1 - 1, g2).poly * Z1)
    if g2:
        poly = poly + Fraction(g2, n) * (fueter_power(g1, g2 - 1).poly * Z2)
    return FueterPower((g1, g2), poly)


def fueter_power_permutation_sum(g1: int, g2: int) -> MPoly:
    """Literal (1/n!) sum over all n! factor orders; oracle, exponential cost."""
    n = g1 + g2
    total = MPoly.zero()
    for order in itertools.permutations([Z1] * g1 + [Z2] * g2):
        prod = MPoly.one()
        for factor in order:
            prod = prod * factor
        total = total + prod
    return total / math.factorial(n)


def taylor_coefficients(f: MPoly) -> TaylorCoeffs:
    """Exact Taylor coefficients of a homogeneous polynomial."""
    if not f.is_homogeneous():
        raise ValueError("input must be homogeneous")
    n = max(f.degree(), 0)
    origin = (Fraction(0), Fraction(0), Fraction(0))
    out = {}
    for g1 in range(n + 1):
        g2 = n - g1
        d = f
        for _ in range(g1):
            d = d.partial(1)
        for _ in range(g2):
            d = d.partial(2)
        out[(g1, g2)] = d.evaluate(origin) / (math.factorial(g1) * math.factorial(g2))
    return TaylorCoeffs(n, out)


def taylor_reconstruct(tc: TaylorCoeffs) -> MPoly:
    total = MPoly.zero()
    for gamma, c in tc.coeffs.items():
        if c:
            total = total + fueter_power(*gamma).poly * c
    return total


def fueter_power_bound_check(g1: int, g2: int, points) -> float:
    """max over points of |V_gamma(x)| / r^n; the claim is that this is <= 1."""
    import numpy as np

    n = g1 + g2
    pts = np.asarray(points, dtype=float)
    r = np.sqrt((pts ** 2).sum(axis=1))
    if np.any(r == 0):
        raise ValueError("points must avoid the origin")
    values = fueter_power(g1, g2).poly.eval_grid(pts[:, 0], pts[:, 1], pts[:, 2])
    moduli = np.sqrt((values ** 2).sum(axis=-1))
    return float(np.max(moduli / r ** n))


# -- printed closed forms (diff material) -----------------------------------------


def parity_gate(i: int, j: int) -> int:
    """1 when i and j have the same parity, else 0.

    Defined for any integers: the printed coefficient formulas use the
    gate at l-1, which is -1 when l = 0.
    """
    return 1 if (i - j) % 2 == 0 else 0


def _comb(a: int, b) -> int:
    """Binomial that is zero outside 0 <= b <= a; b must be integral."""
    if b != int(b):
        raise ValueError(f"non-integral binomial index {b}")
    b = int(b)
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def closed_form_taylor(n: int, l: int, variant: str = "binomial-falling") -> TaylorCoeffs | None:
    """The printed Taylor-coefficient formulas for the X family at (n, l).

    Evaluates the three parity-gated component sums per the given beta
    variant; returns None when that variant's beta is undefined here.
    Every half-integer index is only formed behind its gate, and is
    asserted integral there (a gate bug would raise, not truncate).
    """
    if not 0 <= l <= n + 1:
        raise ValueError(f"order {l} out of range at degree {n}")

    def beta(k: int) -> Fraction | None:
        return beta_coefficient(n, l, k, variant)

    out: dict[tuple[int, int], Quaternion] = {}
    for a1 in range(n + 1):
        a2 = n - a1

        comp0 = Fraction(0)
        if parity_gate(l, n) and parity_gate(a1, l) and parity_gate(a2, 0):
            b = beta((n - l) // 2)
            if b is None:
                return None
            acc = Fraction(0)
            for j in range(l // 2 + 1):
                acc += (-1) ** j * math.comb(l, 2 * j) * _comb((n - l) // 2, Fraction(a1 - l, 2) + j)
            comp0 = b * acc

        comp1 = Fraction(0)
        if parity_gate(l - 1, n) and parity_gate(l - 1, a1) and parity_gate(a2, 0):
            first = Fraction(0)
            second = Fraction(0)
            for p in range(1, (n - l + 1) // 2 + 1):
                b = beta(p)
                if b is None:
                    return None
                outer = b * 2 * p * _comb(p - 1, Fraction(l - n - 1, 2) + p)
                if outer:
                    inner = sum((-1) ** (j + 1) * math.comb(l, 2 * j)
                                * _comb((n - l - 1) // 2, Fraction(a1 - l - 1, 2) + j)
                                for j in range(l // 2 + 1))
                    first += outer * inner
            for p in range((n - l + 1) // 2 + 1):
                b = beta(p)
                if b is None:
                    return None
                outer = b * _comb(p, Fraction(l - n - 1, 2) + p)
                if outer:
                    inner = sum((-1) ** (j + 1) * math.comb(l, 2 * j) * (l - 2 * j)
                                * _comb((n - l + 1) // 2, Fraction(a1 - l + 1, 2) + j)
                                for j in range((l - 1) // 2 + 1))
                    second += outer * inner
            comp1 = first + second

        comp2 = Fraction(0)
        if parity_gate(l - 1, n) and parity_gate(l, a1) and parity_gate(a2, 1):
            first = Fraction(0)
            second = Fraction(0)
            for p in range(1, (n - l + 1) // 2 + 1):
                b = beta(p)
                if b is None:
                    return None
                outer = b * 2 * p * _comb(p - 1, Fraction(l - n - 1, 2) + p)
                if outer:
                    inner = sum((-1) ** (j + 1) * math.comb(l, 2 * j)
                                * _comb((n - l - 1) // 2, Fraction(a1 - l, 2) + j)
                                for j in range(l // 2 + 1))
                    first += outer * inner
            for p in range((n - l + 1) // 2 + 1):
                b = beta(p)
                if b is None:
                    return None
                outer = b * _comb(p, Fraction(l - n - 1, 2) + p)
                if outer:
                    inner = sum((-1) ** (j + 1) * math.comb(l, 2 * j) * (2 * j)
                                * _comb((n - l + 1) // 2, Fraction(a1 - l, 2) + j)
                                for j in range(1, l // 2 + 1))
                    second += outer * inner
            comp2 = first + second

        out[(a1, a2)] = Quaternion(comp0, comp1, comp2, 0)
    return TaylorCoeffs(n, out)
