"""Sparse polynomials in x0, x1, x2 with quaternion coefficients.

Coefficients sit on the left of the (real, hence central) variables, so a
term is  c * x0^a0 * x1^a1 * x2^a2  with c a Quaternion.  Multiplication
of two polynomials multiplies coefficients in quaternion order and adds
exponents, which is exactly right because the variables commute with
everything.

The generalized Cauchy-Riemann operator and its conjugate act from the
left:

    dirac(f)     = d/dx0 f + e1 d/dx1 f + e2 d/dx2 f
    dirac_bar(f) = d/dx0 f - e1 d/dx1 f - e2 d/dx2 f

A polynomial is (left) monogenic when dirac(f) == 0.  dirac(dirac_bar(f))
is the Laplacian in the three variables.

Example
-------
>>> z1 = MPoly.variable(1) - MPoly.scalar(E1) * MPoly.variable(0)
>>> z1.dirac().is_zero()
True
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from .quaternion import E1, E2, Quaternion, frac, Rational

Exponent = tuple[int, int, int]
Point3 = tuple[Fraction, Fraction, Fraction]


def point(x0: Union[Rational, str], x1: Union[Rational, str],
          x2: Union[Rational, str]) -> Point3:
    """Exact point of R^3; floats are rejected."""
    return (frac(x0), frac(x1), frac(x2))


def _as_coeff(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, Fraction)):
        return Quaternion(value)
    raise TypeError(f"not a quaternion coefficient: {value!r}")


class MPoly:
    """Sparse polynomial: dict from exponent triple to Quaternion."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Exponent, Quaternion] | None = None):
        self.terms: dict[Exponent, Quaternion] = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_coeff(coeff)
                if coeff:  # do not store zero coefficients
                    self.terms[tuple(exp)] = coeff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> MPoly:
        return cls()

    @classmethod
    def one(cls) -> MPoly:
        return cls({(0, 0, 0): Quaternion(1)})

    @classmethod
    def scalar(cls, value) -> MPoly:
        return cls({(0, 0, 0): _as_coeff(value)})

    @classmethod
    def variable(cls, i: int) -> MPoly:
        if i not in (0, 1, 2):
            raise ValueError(f"variable index must be 0, 1 or 2, got {i}")
        exp = [0, 0, 0]
        exp[i] = 1
        return cls({tuple(exp): Quaternion(1)})

    @classmethod
    def monomial(cls, exp: Exponent, coeff=1) -> MPoly:
        return cls({tuple(exp): _as_coeff(coeff)})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: MPoly) -> MPoly:
        if not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out[exp] + coeff if exp in out else coeff
        return MPoly(out)

    def __sub__(self, other: MPoly) -> MPoly:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> MPoly:
        return MPoly({exp: -coeff for exp, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MPoly):
            out: dict[Exponent, Quaternion] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    prod = c1 * c2
                    out[exp] = out[exp] + prod if exp in out else prod
            return MPoly(out)
        if isinstance(other, (int, Fraction, Quaternion)):
            # right scalar: coefficients pick it up on the right
            other = _as_coeff(other)
            return MPoly({exp: coeff * other for exp, coeff in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Quaternion)):
            other = _as_coeff(other)
            return MPoly({exp: other * coeff for exp, coeff in self.terms.items()})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly({exp: coeff / other for exp, coeff in self.terms.items()})
        return NotImplemented

    def conjugate(self) -> MPoly:
        return MPoly({exp: coeff.conjugate() for exp, coeff in self.terms.items()})

    # -- calculus -----------------------------------------------------------

    def partial(self, i: int) -> MPoly:
        out = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            lowered = list(exp)
            lowered[i] -= 1
            out[tuple(lowered)] = coeff * exp[i]
        return MPoly(out)

    def dirac(self) -> MPoly:
        return (self.partial(0)
                + MPoly.scalar(E1) * self.partial(1)
                + MPoly.scalar(E2) * self.partial(2))

    def dirac_bar(self) -> MPoly:
        return (self.partial(0)
                - MPoly.scalar(E1) * self.partial(1)
                - MPoly.scalar(E2) * self.partial(2))

    def laplacian(self) -> MPoly:
        return sum((self.partial(i).partial(i) for i in range(3)), MPoly.zero())

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exp) for exp in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, n: int) -> MPoly:
        return MPoly({exp: coeff for exp, coeff in self.terms.items()
                      if sum(exp) == n})

    def is_reduced(self) -> bool:
        """True when every coefficient lies in span{1, e1, e2}."""
        return all(coeff.is_reduced() for coeff in self.terms.values())

    def coefficient(self, exp: Exponent) -> Quaternion:
        return self.terms.get(tuple(exp), Quaternion())

    def component(self, i: int) -> MPoly:
        """Real polynomial (as MPoly) of the i-th quaternion component."""
        out = {}
        for exp, coeff in self.terms.items():
            part = coeff.components()[i]
            if part:
                out[exp] = Quaternion(part)
        return MPoly(out)

    def sc(self) -> MPoly:
        return self.component(0)

    def sorted_terms(self) -> list[tuple[Exponent, Quaternion]]:
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, Quaternion]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for exp, coeff in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exp) if e)
            bits.append(f"({coeff!r})" + (f"*{mono}" if mono else ""))
        return "MPoly[" + " + ".join(bits) + "]"

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, at: Point3) -> Quaternion:
        """Exact evaluation at a rational point."""
        x0, x1, x2 = (frac(c) for c in at)
        total = Quaternion()
        for exp, coeff in self.terms.items():
            total = total + coeff * (x0 ** exp[0] * x1 ** exp[1] * x2 ** exp[2])
        return total

    def eval_grid(self, x0: np.ndarray, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        """Float evaluation on broadcastable arrays.

        Returns an array of shape broadcast(x0,x1,x2).shape + (4,) holding
        the four quaternion components.
        """
        x0, x1, x2 = np.broadcast_arrays(np.asarray(x0, dtype=float),
                                         np.asarray(x1, dtype=float),
                                         np.asarray(x2, dtype=float))
        out = np.zeros(x0.shape + (4,))
        for exp, coeff in self.sorted_terms():
            mono = x0 ** exp[0] * x1 ** exp[1] * x2 ** exp[2]
            comps = coeff.to_floats()
            for i in range(4):
                if comps[i]:
                    out[..., i] += comps[i] * mono
        return out

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"terms": [{"e": list(exp), "c": coeff.to_strings()}
                          for exp, coeff in self.sorted_terms()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> MPoly:
        out = {}
        for term in data["terms"]:
            exp = tuple(term["e"])
            if len(exp) != 3:
                raise ValueError(f"exponent triple expected, got {term['e']}")
            out[exp] = Quaternion.from_strings(term["c"])
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> MPoly:
        return cls.from_json_dict(json.loads(text))


X0 = MPoly.variable(0)
X1 = MPoly.variable(1)
X2 = MPoly.variable(2)

# Fueter variables: the two monogenic degree-1 building blocks
Z1 = X1 - MPoly.scalar(E1) * X0
Z2 = X2 - MPoly.scalar(E2) * X0
