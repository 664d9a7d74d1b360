"""Commutative bicomplex numbers ``c0 + c1*i + c2*j + c3*ij``.

Units obey ``i*i = j*j = -1`` and ``i*j = j*i``, so ``(ij)*(ij) = 1``.  The
algebra is commutative but has zero divisors, e.g. ``(1+ij)*(1-ij) = 0``;
no inverse is offered.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .scalars import (
    BigFloat,
    MixedExactnessError,
    MixedRadicandError,
    QuadExt,
    as_scalar,
    format_scalar,
    one_like,
    parse_scalar,
    to_bigfloat,
    zero_like,
)


class ConjKind(enum.Enum):
    STAR1 = 1  # negate i and ij parts
    STAR2 = 2  # negate j and ij parts
    STAR3 = 3  # negate i and j parts


def _unify(coeffs):
    coeffs = [as_scalar(c) for c in coeffs]
    floats = [isinstance(c, BigFloat) for c in coeffs]
    if any(floats):
        if not all(floats):
            raise MixedExactnessError("bicomplex coefficients mix exact and BigFloat values")
        return coeffs
    radicands = {c.d for c in coeffs if isinstance(c, QuadExt)}
    if len(radicands) > 1:
        raise MixedRadicandError(f"bicomplex coefficients use radicands {sorted(radicands)}")
    if radicands:
        (d,) = radicands
        coeffs = [c if isinstance(c, QuadExt) else QuadExt(c, 0, d) for c in coeffs]
    return coeffs


@dataclass(frozen=True)
class Bicomplex:
    c0: object = Fraction(0)
    c1: object = Fraction(0)
    c2: object = Fraction(0)
    c3: object = Fraction(0)

    def __post_init__(self):
        for name, value in zip(("c0", "c1", "c2", "c3"), _unify(self.coeffs)):
            object.__setattr__(self, name, value)

    @property
    def coeffs(self) -> tuple:
        return (self.c0, self.c1, self.c2, self.c3)

    @classmethod
    def from_coeffs(cls, coeffs) -> Bicomplex:
        return cls(*coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Bicomplex({', '.join(format_scalar(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        parts = [format_scalar(self.c0)]
        for c, unit in zip(self.coeffs[1:], ("i", "j", "ij")):
            parts.append(f"({format_scalar(c)})*{unit}")
        return " + ".join(parts)

    def __add__(self, other):
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(*(x - y for x, y in zip(self, other)))

    def __neg__(self) -> Bicomplex:
        return Bicomplex(*(-x for x in self))

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            return bc_mul(self, other)
        if isinstance(other, (Rational, QuadExt, BigFloat)):
            return bc_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, QuadExt, BigFloat)):
            return bc_scale(other, self)
        return NotImplemented

    def __truediv__(self, scalar):
        """Division by a scalar only; bicomplex division is not defined here."""
        if isinstance(scalar, Bicomplex):
            return NotImplemented
        return Bicomplex(*(x / as_scalar(scalar) for x in self))

    def __pow__(self, n: int) -> Bicomplex:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        z = zero_like(self.c0)
        result = Bicomplex(one_like(self.c0), z, z, z)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(bool(c) for c in self)

    def conjugate(self, kind: ConjKind) -> Bicomplex:
        return bc_conjugate(self, kind)

    def to_bigfloat(self, precision_bits: int) -> Bicomplex:
        return Bicomplex(*(to_bigfloat(c, precision_bits) for c in self))

    def to_json(self) -> dict:
        return {f"c{k}": format_scalar(c) for k, c in enumerate(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict, radicand: int | None = None) -> Bicomplex:
        return cls(*(parse_scalar(data[f"c{k}"], radicand) for k in range(4)))


ONE = Bicomplex(1, 0, 0, 0)
I = Bicomplex(0, 1, 0, 0)
J = Bicomplex(0, 0, 1, 0)
IJ = Bicomplex(0, 0, 0, 1)


def bc_add(x: Bicomplex, y: Bicomplex) -> Bicomplex:
    return x + y


def bc_scale(lam, x: Bicomplex) -> Bicomplex:
    lam = as_scalar(lam)
    return Bicomplex(*(lam * c for c in x))


def bc_mul(x: Bicomplex, y: Bicomplex) -> Bicomplex:
    a, b, c, d = x.coeffs
    a2, b2, c2, d2 = y.coeffs
    return Bicomplex(
        a * a2 - b * b2 - c * c2 + d * d2,
        a * b2 + b * a2 - c * d2 - d * c2,
        a * c2 + c * a2 - b * d2 - d * b2,
        a * d2 + d * a2 + b * c2 + c * b2,
    )


_CONJ_SIGNS = {
    ConjKind.STAR1: (1, -1, 1, -1),
    ConjKind.STAR2: (1, 1, -1, -1),
    ConjKind.STAR3: (1, -1, -1, 1),
}


def bc_conjugate(x: Bicomplex, kind: ConjKind) -> Bicomplex:
    return Bicomplex(*(c if s > 0 else -c for c, s in zip(x, _CONJ_SIGNS[kind])))


def bc_norm_product(x: Bicomplex, kind: ConjKind) -> Bicomplex:
    """``x`` times its ``kind`` conjugate.

    The result lies in span{1, j} for STAR1, span{1, i} for STAR2 and
    span{1, ij} for STAR3.
    """
    return bc_mul(x, bc_conjugate(x, kind))


def bc_euclid_sq(x: Bicomplex):
    """Sum of the squared coefficients."""
    a, b, c, d = x.coeffs
    return a * a + b * b + c * c + d * d


def norm_value(x: Bicomplex, kind: ConjKind):
    """Scalar norm: squared Euclidean length of the conjugate product."""
    return bc_euclid_sq(bc_norm_product(x, kind))


def bc_scalar_part(x: Bicomplex):
    return x.c0


def bc_vector_part(x: Bicomplex) -> Bicomplex:
    return Bicomplex(zero_like(x.c0), x.c1, x.c2, x.c3)


def bc_vec(x: Bicomplex) -> np.ndarray:
    """Coefficient column on the basis (1, i, j, ij) as an object array."""
    v = np.empty(4, dtype=object)
    v[:] = x.coeffs
    return v


def bc_from_vec(v) -> Bicomplex:
    return Bicomplex(*list(v))


def bc_matrix(x: Bicomplex) -> np.ndarray:
    """Left-multiplication matrix: ``bc_matrix(x) @ bc_vec(y) == bc_vec(x * y)``."""
    a, b, c, d = x.coeffs
    rows = [
        [a, -b, -c, d],
        [b, a, -d, -c],
        [c, -d, a, -b],
        [d, c, b, a],
    ]
    m = np.empty((4, 4), dtype=object)
    for r, row in enumerate(rows):
        m[r, :] = row
    return m
