"""Solid harmonics and the homogeneous monogenic polynomial basis.

Construction path (canonical): the degree-(n+1) solid harmonics are built
exactly in Cartesian form from associated Legendre bodies,

    r^(n+1) U^m_(n+1) = Re[(x1 + i x2)^m] * sum_j q_j x0^j (x0^2+x1^2+x2^2)^((n+1-m-j)/2)
    r^(n+1) V^m_(n+1) = Im[(x1 + i x2)^m] * (same radial-axial factor),

with q_j the coefficients of d^m/dt^m P_(n+1); the exponent of the radius
factor is a non-negative even integer by the parity of the derivative body.
Applying the hypercomplex derivative (1/2) dirac_bar then yields the
degree-n homogeneous monogenic polynomials (X and Y families).  Everything
stays in exact rational arithmetic, so monogenicity is a literal zero
polynomial, and squared norms are rational multiples of pi.

An alternative closed-form assembly of the X family (an axial expansion
with coefficients beta_{n+1,l,k}) exists in several printed variants that
disagree with each other; see axial_closed_form and the report module.
The derivative path is the single source of truth, the variants are
diff material only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .legendre import assoc_body, assoc_legendre_float, double_factorial
from .moments import norm_sq_sphere
from .mpoly import MPoly
from .quaternion import Quaternion

KINDS = ("X", "Y")


class SqrtPi:
    """Exact value sqrt(rational * pi); float only on request."""

    __slots__ = ("rational",)

    def __init__(self, rational):
        self.rational = Fraction(rational)
        if self.rational < 0:
            raise ValueError("negative radicand")

    def __float__(self) -> float:
        return math.sqrt(float(self.rational) * math.pi)

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtPi):
            return self.rational == other.rational
        return NotImplemented

    def __repr__(self) -> str:
        return f"sqrt({self.rational}*pi)"


@dataclass(frozen=True)
class SolidHarmonic:
    """Homogeneous harmonic polynomial r^deg U^m_deg or r^deg V^m_deg."""

    deg: int
    kind: str  # "U" (cos branch) or "V" (sin branch)
    m: int
    poly: MPoly


@dataclass(frozen=True)
class BasisIndex:
    kind: str  # "X" or "Y"
    n: int
    m: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be X or Y, got {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"degree must be >= 0, got {self.n}")
        low = 0 if self.kind == "X" else 1
        if not low <= self.m <= self.n + 1:
            raise ValueError(f"order {self.m} out of range for {self.kind} at degree {self.n}")

    @property
    def label(self) -> str:
        return f"{self.kind}:{self.m}"

    @classmethod
    def parse(cls, n: int, label: str) -> BasisIndex:
        kind, _, m = label.partition(":")
        if not m:
            raise ValueError(f"index label must look like 'X:0' or 'Y:2', got {label!r}")
        return cls(kind, n, int(m))


@dataclass(frozen=True)
class BasisElement:
    """One homogeneous monogenic basis polynomial with its exact norms.

    poly is the raw (unnormalized) polynomial; norm_S and norm_B are the
    L2 norms over the unit sphere and unit ball, kept as sqrt(rational*pi)
    so that normalized Gram matrices stay exactly rational.
    """

    index: BasisIndex
    poly: MPoly

    @property
    def norm_sq_S(self) -> Fraction:
        return _norm_sq_over_pi(self.index)

    @property
    def norm_S(self) -> SqrtPi:
        return SqrtPi(self.norm_sq_S)

    @property
    def norm_B(self) -> SqrtPi:
        return SqrtPi(self.norm_sq_S / (2 * self.index.n + 3))

    def eval_normalized(self, x0, x1, x2, scale: float = 1.0):
        """Float values of scale * poly / norm_S on a grid."""
        values = self.poly.eval_grid(x0, x1, x2)
        return values * (scale / float(self.norm_S))


# -- construction ---------------------------------------------------------------


def _complex_power_parts(m: int) -> tuple[MPoly, MPoly]:
    """Re and Im of (x1 + i x2)^m as exact polynomials."""
    re: dict = {}
    im: dict = {}
    for j in range(m + 1):
        c = math.comb(m, j)
        target, sign = ((re, 1), (im, 1), (re, -1), (im, -1))[j % 4]
        target[(0, m - j, j)] = Quaternion(sign * c)
    return MPoly(re), MPoly(im)


@lru_cache(maxsize=None)
def _radius_sq_power(k: int) -> MPoly:
    r2 = MPoly({(2, 0, 0): Quaternion(1), (0, 2, 0): Quaternion(1), (0, 0, 2): Quaternion(1)})
    out = MPoly.one()
    for _ in range(k):
        out = out * r2
    return out


@lru_cache(maxsize=None)
def solid_harmonic(deg: int, kind: str, m: int) -> SolidHarmonic:
    """Exact Cartesian form of r^deg U^m_deg (kind U) or r^deg V^m_deg (kind V)."""
    if deg < 1:
        raise ValueError(f"degree must be >= 1, got {deg}")
    if kind not in ("U", "V"):
        raise ValueError(f"kind must be U or V, got {kind!r}")
    low = 0 if kind == "U" else 1
    if not low <= m <= deg:
        raise ValueError(f"order {m} out of range for {kind} of degree {deg}")
    body = assoc_body(deg, m)
    re, im = _complex_power_parts(m)
    angular = re if kind == "U" else im
    axial = MPoly.zero()
    for j, q in enumerate(body):
        if not q:
            continue
        rest = deg - m - j
        assert rest % 2 == 0, "derivative body parity broken"
        axial = axial + q * MPoly.monomial((j, 0, 0)) * _radius_sq_power(rest // 2)
    return SolidHarmonic(deg, kind, m, angular * axial)


@lru_cache(maxsize=None)
def spherical_monogenic(n: int, kind: str, m: int) -> BasisElement:
    """Degree-n homogeneous monogenic polynomial r^n X^m_n or r^n Y^m_n.

    Obtained as (1/2) dirac_bar applied to the matching solid harmonic of
    degree n+1 (the hypercomplex derivative of its monogenic extension
    coincides with this on harmonic polynomials).
    """
    index = BasisIndex(kind, n, m)
    harmonic = solid_harmonic(n + 1, "U" if kind == "X" else "V", m)
    poly = harmonic.poly.dirac_bar() / 2
    return BasisElement(index, poly)


def degree_indices(n: int) -> list[BasisIndex]:
    """Canonical ordering: X:0, X:1, Y:1, ..., X:n+1, Y:n+1 (2n+3 entries)."""
    out = [BasisIndex("X", n, 0)]
    for m in range(1, n + 2):
        out.append(BasisIndex("X", n, m))
        out.append(BasisIndex("Y", n, m))
    return out


@lru_cache(maxsize=None)
def basis_for_degree(n: int) -> tuple[BasisElement, ...]:
    return tuple(spherical_monogenic(ix.n, ix.kind, ix.m) for ix in degree_indices(n))


@lru_cache(maxsize=None)
def _norm_sq_over_pi(index: BasisIndex) -> Fraction:
    poly = spherical_monogenic(index.n, index.kind, index.m).poly
    return norm_sq_sphere(poly)


# -- closed-form norms ------------------------------------------------------------


def norm_sq_sphere_closed(n: int, m: int) -> Fraction:
    """Squared L2(S) norm over pi.

    For m >= 1 this is the literature relation (n+1)(n+1+m)!/(2(n+1-m)!);
    the m = 0 value is not covered by that relation and equals n+1
    (checked exactly against the moment integrals in the tests).
    """
    if m == 0:
        return Fraction(n + 1)
    return Fraction((n + 1) * math.factorial(n + 1 + m), 2 * math.factorial(n + 1 - m))


def norm_sq_ball_closed(n: int, m: int) -> Fraction:
    return norm_sq_sphere_closed(n, m) / (2 * n + 3)


def sc_norm_sq_closed(n: int, m: int) -> Fraction:
    """Squared L2(S) norm over pi of the scalar part, m = 0..n."""
    if not 0 <= m <= n:
        raise ValueError(f"scalar part of order {m} vanishes or is out of range at degree {n}")
    if m == 0:
        return Fraction((n + 1) ** 2, 2 * n + 1)
    return Fraction((n + 1 + m) * math.factorial(n + 1 + m),
                    2 * (2 * n + 1) * math.factorial(n - m))


def sc_e1_norm_sq_closed(n: int) -> Fraction:
    """Squared L2(S) norm over pi of Sc(X^{n+1}_n e1), as printed: (n+1)(2n+2)!/4.

    Fails at n = 0, where the exact values are 1 (X branch) and 0 (Y branch);
    see the n = 0 notes in the tests.
    """
    return Fraction((n + 1) * math.factorial(2 * n + 2), 4)


# -- scalar parts and monogenic constants (closed angular forms) -------------------


def sc_closed_form(n: int, m: int, kind: str, theta, phi):
    """Sc of X^m_n / Y^m_n on the sphere: (n+1+m)/2 * P^m_n(cos th) * cos/sin(m phi)."""
    import numpy as np

    if kind not in KINDS:
        raise ValueError(f"kind must be X or Y, got {kind!r}")
    t = np.cos(np.asarray(theta, dtype=float))
    trig = np.cos if kind == "X" else np.sin
    return (n + 1 + m) / 2.0 * assoc_legendre_float(n, m, t) * trig(m * np.asarray(phi, dtype=float))


def monogenic_constant_eval(n: int, kind: str, theta: float, phi: float) -> tuple[float, float, float, float]:
    """Value of X^{n+1}_n (kind X) or Y^{n+1}_n (kind Y) at a sphere point.

    Uses C^{n+1,n} = ((n+1)/2) P^{n+1}_{n+1}(cos th)/sin th, which reduces to
    ((n+1)/2)(2n+1)!! sin^n th; the reduced form is used everywhere so the
    poles th = 0, pi need no special casing.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be X or Y, got {kind!r}")
    c = (n + 1) / 2.0 * double_factorial(2 * n + 1) * math.sin(theta) ** n
    if kind == "X":
        return (0.0, -c * math.cos(n * phi), c * math.sin(n * phi), 0.0)
    return (0.0, -c * math.sin(n * phi), -c * math.cos(n * phi), 0.0)


# -- the axial closed-form variants (diff material, never canonical) ----------------


def legendre_leading(deg: int, k: int) -> Fraction:
    """Coefficient a_{deg,k} of t^(deg-2k) in P_deg."""
    if not 0 <= 2 * k <= deg:
        return Fraction(0)
    num = (-1) ** k * math.factorial(2 * deg - 2 * k)
    den = 2 ** deg * math.factorial(k) * math.factorial(deg - k) * math.factorial(deg - 2 * k)
    return Fraction(num, den)


def falling(x: int, count: int) -> int:
    out = 1
    for i in range(count):
        out *= x - i
    return out


def rising(x: int, count: int) -> int:
    out = 1
    for i in range(count):
        out *= x + i
    return out


BETA_VARIANTS = ("binomial-falling", "statement-rising", "proof-bare")


def beta_coefficient(n: int, l: int, k: int, variant: str) -> Fraction | None:
    """The three printed/implied readings of beta_{n+1,l,k}.

    binomial-falling: a_{n+1,k}/2 times the falling factorial with l factors
        (the reading that makes the axial expansion match the derivative path).
    statement-rising: a_{n+1,k}/2 times the rising factorial (x)_{l-1} with
        l-1 factors; at l = 0 the symbol (x)_{-1} = 1/(x-1) is used, which is
        undefined at x = 1 (None is returned there).
    proof-bare: 2 times the falling factorial, no a_{n+1,k} at all.
    """
    x = n + 1 - 2 * k
    if variant == "binomial-falling":
        return legendre_leading(n + 1, k) / 2 * falling(x, l)
    if variant == "statement-rising":
        if l == 0:
            if x == 1:
                return None
            return legendre_leading(n + 1, k) / 2 / (x - 1)
        return legendre_leading(n + 1, k) / 2 * rising(x, l - 1)
    if variant == "proof-bare":
        return Fraction(2 * falling(x, l))
    raise ValueError(f"unknown beta variant {variant!r}")


def _cos_sum(l: int) -> MPoly:
    """sum_j (-1)^j C(l,2j) x1^(l-2j) x2^(2j) (the cos(l phi) expansion)."""
    out = {}
    for j in range(l // 2 + 1):
        out[(0, l - 2 * j, 2 * j)] = Quaternion((-1) ** j * math.comb(l, 2 * j))
    return MPoly(out)


def axial_closed_form(n: int, l: int, variant: str = "binomial-falling") -> MPoly | None:
    """The printed component-wise expansion of r^n X^l_n, per beta variant.

    Returns None when the variant's beta is undefined for some (k) needed
    here (statement-rising at l = 0 can hit a pole).  Compare against
    spherical_monogenic(n, "X", l).poly; agreement depends on the variant.
    """
    if not 0 <= l <= n + 1:
        raise ValueError(f"order {l} out of range at degree {n}")

    def beta(k: int) -> Fraction | None:
        return beta_coefficient(n, l, k, variant)

    cos_l = _cos_sum(l)
    dcos_x1 = cos_l.partial(1)
    dcos_x2 = cos_l.partial(2)

    comp0 = MPoly.zero()
    for k in range((n - l) // 2 + 1):
        b = beta(k)
        if b is None:
            return None
        comp0 = comp0 + b * (n + 1 - 2 * k - l) * MPoly.monomial((n - 2 * k - l, 0, 0)) \
            * _radius_sq_power(k) * cos_l
    for k in range(1, (n + 1 - l) // 2 + 1):
        b = beta(k)
        if b is None:
            return None
        comp0 = comp0 + b * (2 * k) * MPoly.monomial((n + 2 - 2 * k - l, 0, 0)) \
            * _radius_sq_power(k - 1) * cos_l

    comp1 = MPoly.zero()
    comp2 = MPoly.zero()
    x1 = MPoly.monomial((0, 1, 0))
    x2 = MPoly.monomial((0, 0, 1))
    for k in range(1, (n + 1 - l) // 2 + 1):
        b = beta(k)
        if b is None:
            return None
        common = b * (2 * k) * MPoly.monomial((n + 1 - 2 * k - l, 0, 0)) * _radius_sq_power(k - 1)
        comp1 = comp1 - common * x1 * cos_l
        comp2 = comp2 - common * x2 * cos_l
    for k in range((n + 1 - l) // 2 + 1):
        b = beta(k)
        if b is None:
            return None
        common = b * MPoly.monomial((n + 1 - 2 * k - l, 0, 0)) * _radius_sq_power(k)
        comp1 = comp1 - common * dcos_x1
        comp2 = comp2 - common * dcos_x2
    e1 = MPoly.scalar(Quaternion(0, 1))
    e2 = MPoly.scalar(Quaternion(0, 0, 1))
    return comp0 + comp1 * e1 + comp2 * e2
