"""Quadrature on the unit sphere and ball, float inner products, Fourier analysis.

The sphere rule is tensor Gauss-Legendre in t = cos(theta) crossed with a
uniform midpoint grid in phi.  For integrands that are polynomials on the
sphere of total degree D this is exact (up to roundoff) once

    n_t >= ceil((D+1)/2)   and   n_phi >= D+1,

because the integrand is a polynomial of degree <= D in t times a
trigonometric polynomial of degree <= D in phi, and the midpoint rule on a
full period integrates e^(i k phi) exactly for |k| < n_phi.  Everything in
this module is binary64; the exact counterparts live in the moments module
and are used by the tests to pin these numbers down.

Summation order is fixed (phi axis first, then theta) so repeated runs and
any thread count produce byte-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .basis import basis_for_degree, degree_indices
from .mpoly import MPoly


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights for the sphere; weights sum to 4*pi."""

    t_nodes: np.ndarray
    t_weights: np.ndarray
    n_phi: int
    exactness_degree: int

    @classmethod
    def for_degree(cls, max_degree: int) -> QuadratureRule:
        if max_degree < 0:
            raise ValueError(f"max_degree must be >= 0, got {max_degree}")
        n_t = max((max_degree + 1 + 1) // 2, 1)
        n_phi = max(max_degree + 1, 1)
        nodes, weights = np.polynomial.legendre.leggauss(n_t)
        return cls(nodes, weights, n_phi, max_degree)

    @property
    def phi_nodes(self) -> np.ndarray:
        return 2.0 * np.pi * (np.arange(self.n_phi) + 0.5) / self.n_phi

    def grid(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Cartesian sphere points, shape (n_t, n_phi) each."""
        t = self.t_nodes[:, None]
        s = np.sqrt(1.0 - t * t)
        phi = self.phi_nodes[None, :]
        return np.broadcast_arrays(t * np.ones_like(phi), s * np.cos(phi), s * np.sin(phi))

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Integrate grid samples over the sphere; leading axes (n_t, n_phi)."""
        values = np.asarray(values)
        phi_summed = values.sum(axis=1) * (2.0 * np.pi / self.n_phi)
        return np.tensordot(self.t_weights, phi_summed, axes=(0, 0))

    def weight_total(self) -> float:
        return float(self.t_weights.sum() * 2.0 * np.pi)


def _require_exactness(rule: QuadratureRule, needed: int):
    if rule.exactness_degree < needed:
        raise ValueError(f"rule exact to degree {rule.exactness_degree}, need {needed}")


def _grid_values(f, rule: QuadratureRule) -> np.ndarray:
    x0, x1, x2 = rule.grid()
    if isinstance(f, MPoly):
        return f.eval_grid(x0, x1, x2)
    values = np.asarray(f(x0, x1, x2), dtype=float)
    if values.shape != x0.shape + (4,):
        raise ValueError("sampled function must return quaternion components, shape grid+(4,)")
    return values


def conj_product_grid(fv: np.ndarray, gv: np.ndarray) -> np.ndarray:
    """conj(f) * g from component samples, componentwise on the grid."""
    fa, fb, fc, fd = (fv[..., i] for i in range(4))
    ga, gb, gc, gd = (gv[..., i] for i in range(4))
    return np.stack([
        fa * ga + fb * gb + fc * gc + fd * gd,
        fa * gb - fb * ga - fc * gd + fd * gc,
        fa * gc + fb * gd - fc * ga - fd * gb,
        fa * gd - fb * gc + fc * gb - fd * ga,
    ], axis=-1)


@lru_cache(maxsize=None)
def radial_moment(power: int) -> float:
    """Gauss-Legendre value of the integral of r^power over [0, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(power // 2 + 2)
    r = 0.5 * (nodes + 1.0)
    return float(np.dot(weights, 0.5 * r ** power))


def inner_product_S(f, g, rule: QuadratureRule) -> np.ndarray:
    """Quaternion-valued integral of conj(f) g over S, as a 4-vector."""
    if isinstance(f, MPoly) and isinstance(g, MPoly):
        _require_exactness(rule, max(f.degree(), 0) + max(g.degree(), 0))
    prod = conj_product_grid(_grid_values(f, rule), _grid_values(g, rule))
    return rule.integrate(prod)


def sc_inner_product_S(f, g, rule: QuadratureRule) -> float:
    """The real inner product: integral of Sc(conj(f) g) over S."""
    if isinstance(f, MPoly) and isinstance(g, MPoly):
        _require_exactness(rule, max(f.degree(), 0) + max(g.degree(), 0))
    fv = _grid_values(f, rule)
    gv = _grid_values(g, rule)
    return float(rule.integrate((fv * gv).sum(axis=-1)))


def inner_product_B(f: MPoly, g: MPoly, rule: QuadratureRule,
                    n_radial: int | None = None) -> np.ndarray:
    """Quaternion-valued integral of conj(f) g over the unit ball.

    Both inputs must be homogeneous; the radial direction is integrated by
    an actual Gauss-Legendre rule on [0, 1] (not the analytic 1/(n+k+3)),
    so the ball/sphere relation stays an honest statement to test.
    """
    for p in (f, g):
        if not p.is_homogeneous():
            raise ValueError("ball inner product needs homogeneous inputs")
    n = max(f.degree(), 0)
    k = max(g.degree(), 0)
    if n_radial is not None:
        nodes, weights = np.polynomial.legendre.leggauss(n_radial)
        r = 0.5 * (nodes + 1.0)
        radial = float(np.dot(weights, 0.5 * r ** (n + k + 2)))
    else:
        radial = radial_moment(n + k + 2)
    return inner_product_S(f, g, rule) * radial


@dataclass
class FourierCoeffs:
    """Real coefficients w.r.t. the ball-orthonormal system, by degree block.

    values[(n, label)] is the coefficient of sqrt(2n+3) r^n X^(m,*)_n (or
    Y), labels as in BasisIndex ("X:0", "X:1", "Y:1", ...).
    """

    max_degree: int
    values: dict[tuple[int, str], float] = field(default_factory=dict)

    def coefficient(self, n: int, label: str) -> float:
        return self.values[(n, label)]

    def block(self, n: int) -> list[float]:
        return [self.values.get((n, ix.label), 0.0) for ix in degree_indices(n)]

    def items(self):
        return sorted(self.values.items())

    def to_json_dict(self) -> dict:
        return {"max_degree": self.max_degree,
                "coefficients": [{"n": n, "index": label, "value": v}
                                 for (n, label), v in self.items()]}


_SAMPLE_CACHE: dict = {}


def _element_samples(element, rule: QuadratureRule) -> np.ndarray:
    """Grid samples of a basis polynomial, cached by rule geometry.

    Rules with the same node counts have identical nodes (Gauss-Legendre
    and midpoint grids are deterministic), so the geometry is a sound key.
    """
    key = (len(rule.t_nodes), rule.n_phi, element.index.n, element.index.label)
    if key not in _SAMPLE_CACHE:
        x0, x1, x2 = rule.grid()
        _SAMPLE_CACHE[key] = element.poly.eval_grid(x0, x1, x2)
    return _SAMPLE_CACHE[key]


def fourier_expand(f, max_degree: int, rule: QuadratureRule) -> FourierCoeffs:
    """Project onto the orthonormal system, degrees 0..max_degree.

    The coefficient of sqrt(2n+3) r^n X^(m,*)_n is the real ball inner
    product with that unit vector; by homogeneity and the cross-degree
    sphere orthogonality of the system it reduces to a sphere integral:

        alpha = <f restricted to S, X^(m,*)_n>_S / sqrt(2n+3).

    f may be an MPoly (sum of homogeneous monogenic blocks) or a sampled
    A-valued function on the rule grid.
    """
    f_values = _grid_values(f, rule)
    out = FourierCoeffs(max_degree)
    for n in range(max_degree + 1):
        for element in basis_for_degree(n):
            e_values = _element_samples(element, rule)
            raw = float(rule.integrate((f_values * e_values).sum(axis=-1)))
            norm = float(element.norm_S)
            out.values[(n, element.index.label)] = raw / norm / math.sqrt(2 * n + 3)
    return out


def fourier_synthesize(coeffs: FourierCoeffs, x0, x1, x2) -> np.ndarray:
    """Evaluate the truncated series at Cartesian points; returns grid+(4,)."""
    x0 = np.asarray(x0, dtype=float)
    total = np.zeros(np.broadcast(x0, x1, x2).shape + (4,))
    for n in range(coeffs.max_degree + 1):
        for element in basis_for_degree(n):
            c = coeffs.values.get((n, element.index.label), 0.0)
            if c:
                scale = c * math.sqrt(2 * n + 3) / float(element.norm_S)
                total += scale * element.poly.eval_grid(x0, x1, x2)
    return total


def gram_matrix_ball(max_degree: int, rule: QuadratureRule | None = None) -> np.ndarray:
    """Real-inner-product Gram of the full orthonormal system, degrees <= max_degree.

    Entry order is degree-major with the canonical within-degree ordering;
    the matrix should be the identity (Theorem-level claim, tested).
    """
    elements = [e for n in range(max_degree + 1) for e in basis_for_degree(n)]
    if rule is None:
        rule = QuadratureRule.for_degree(2 * max_degree)
    x0, x1, x2 = rule.grid()
    # normalized samples of sqrt(2n+3) r^n X^(m,*)_n on the sphere grid
    samples = [e.eval_normalized(x0, x1, x2, scale=math.sqrt(2 * e.index.n + 3))
               for e in elements]
    radial = {key: radial_moment(key + 2)
              for key in {e.index.n + g.index.n for e in elements for g in elements}}
    size = len(elements)
    gram = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            sphere = float(rule.integrate((samples[i] * samples[j]).sum(axis=-1)))
            value = sphere * radial[elements[i].index.n + elements[j].index.n]
            gram[i, j] = gram[j, i] = value
    return gram


def gram_matrix_quaternion(n: int, rule: QuadratureRule | None = None) -> np.ndarray:
    """Quaternion-valued sphere Gram of one degree block, shape (s, s, 4).

    This one is not diagonal: the system is orthonormal for the real inner
    product, while the quaternion-valued products keep nonzero vector
    parts.  Reported for inspection, never asserted diagonal.
    """
    elements = basis_for_degree(n)
    if rule is None:
        rule = QuadratureRule.for_degree(2 * n)
    size = len(elements)
    gram = np.zeros((size, size, 4))
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            gram[i, j] = inner_product_S(f.poly, g.poly, rule) / (float(f.norm_S) * float(g.norm_S))
    return gram
