"""Weyl dimension formula, the height-t polynomials f_j, and the minimal orbit S."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hwbound.rootsys import (
    RootSystemData,
    check_weight,
    diagram_automorphism_orbits,
    fundamental,
    nilradical_indices,
)


class WeylIntegralityError(ArithmeticError):
    """The Weyl product failed to be an integer, which means the root data is wrong."""


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with ``Fraction`` coefficients in ascending degree order."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def linear(cls, c0, c1) -> "ExactPolynomial":
        return cls((Fraction(c0), Fraction(c1)))

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls((Fraction(c),))

    @classmethod
    def product(cls, factors: Iterable["ExactPolynomial"]) -> "ExactPolynomial":
        out = cls.constant(1)
        for f in factors:
            out = out * f
        return out

    @classmethod
    def interpolate(cls, values: Sequence) -> "ExactPolynomial":
        """The unique polynomial of degree < len(values) with ``p(t) = values[t]``."""
        # Newton forward differences on the nodes 0, 1, ..., k-1
        diffs = [Fraction(v) for v in values]
        newton = []
        while diffs:
            newton.append(diffs[0])
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        out = cls.constant(0)
        basis = cls.constant(1)
        for k, d in enumerate(newton):
            out = out + basis * cls.constant(d / math.factorial(k))
            basis = basis * cls.linear(-k, 1)
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return ExactPolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        ))

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ExactPolynomial(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ExactPolynomial(tuple(out))

    def shift(self, c) -> "ExactPolynomial":
        """``t -> p(t + c)`` (Taylor shift)."""
        out = ExactPolynomial(())
        step = ExactPolynomial.linear(c, 1)
        for coef in reversed(self.coefficients):
            out = out * step + ExactPolynomial.constant(coef)
        return out

    def nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coefficients)


# --- Weyl dimension formula ---------------------------------------------------

_DENOMINATORS: dict = {}


def _denominator(rs: RootSystemData) -> int:
    key = rs.lie_type
    den = _DENOMINATORS.get(key)
    if den is None:
        den = math.prod(sum(c) for c in rs.coroot_coeffs)
        _DENOMINATORS[key] = den
    return den


def weyl_numerator(rs: RootSystemData, w: Sequence[int]) -> int:
    """``prod_{alpha > 0} <rho + lambda, alpha^vee>``."""
    shifted = [a + 1 for a in w]
    return math.prod(sum(c * s for c, s in zip(cc, shifted)) for cc in rs.coroot_coeffs)


def weyl_dim(rs: RootSystemData, w: Sequence[int]) -> int:
    """Exact dimension of the irreducible module with highest weight ``sum w_i lambda_i``."""
    w = check_weight(rs, w)
    num = weyl_numerator(rs, w)
    den = _denominator(rs)
    q, r = divmod(num, den)
    if r:
        raise WeylIntegralityError(f"{rs.lie_type} {w}: {num}/{den} is not an integer")
    return q


def weyl_factors(rs: RootSystemData, w: Sequence[int]) -> list[tuple[int, int]]:
    """Per-root ``(numerator, denominator)`` pairings, in positive-root order."""
    shifted = [a + 1 for a in w]
    return [(sum(c * s for c, s in zip(cc, shifted)), sum(cc)) for cc in rs.coroot_coeffs]


def f_poly(rs: RootSystemData, j: int) -> ExactPolynomial:
    """``f_j(t) = dim V(t lambda_j)`` as an exact polynomial in ``t``.

    Obtained by interpolating ``weyl_dim`` at ``t = 0 .. deg``, where ``deg`` is
    the number of roots in the nilradical ``u_j``.
    """
    deg = len(nilradical_indices(rs, j))
    values = [weyl_dim(rs, fundamental(rs.rank, j, t)) for t in range(deg + 1)]
    p = ExactPolynomial.interpolate(values)
    if p.degree != deg:
        raise AssertionError(f"{rs.lie_type} node {j}: degree {p.degree} != {deg}")
    return p


def f_poly_product(rs: RootSystemData, j: int) -> ExactPolynomial:
    """Same polynomial as ``f_poly`` built directly as a product of linear factors."""
    factors = []
    for k in nilradical_indices(rs, j):
        cc = rs.coroot_coeffs[k]
        p, q = sum(cc), cc[j - 1]
        factors.append(ExactPolynomial.linear(1, Fraction(q, p)))
    return ExactPolynomial.product(factors)


@dataclass(frozen=True)
class MinFundamentalReport:
    s: int
    orbit: frozenset[int]
    m: int


def fundamental_dims(rs: RootSystemData) -> list[int]:
    return [weyl_dim(rs, fundamental(rs.rank, i)) for i in range(1, rs.rank + 1)]


def min_fundamental(rs: RootSystemData) -> MinFundamentalReport:
    """Smallest fundamental module and the diagram orbit of nodes attaining it."""
    dims = fundamental_dims(rs)
    m = min(dims)
    nodes = frozenset(i + 1 for i, d in enumerate(dims) if d == m)
    orbits = diagram_automorphism_orbits(rs.lie_type)
    if nodes not in orbits:
        raise AssertionError(f"{rs.lie_type}: minimal nodes {sorted(nodes)} are not one orbit")
    return MinFundamentalReport(s=min(nodes), orbit=nodes, m=m)
