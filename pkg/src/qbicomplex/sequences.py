"""q-Fibonacci and q-Lucas bicomplex sequences.

``bf(n)`` has coefficients ``alpha**(n+k-1) * [n+k]_q`` and ``bl(n)`` has
``alpha**(n+k) * (1 + q**(n+k))`` for ``k = 0..3`` on the basis
(1, i, j, ij).  Both have Binet forms in terms of

    gamma_hat = 1 + a i + a^2 j + a^3 ij,      a = alpha
    delta_hat = 1 + b i + b^2 j + b^3 ij,      b = alpha * q
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .bicomplex import Bicomplex
from .qcalc import NegativeIndexError, QParams, q_integer
from .scalars import BigFloat, QuadExt, as_scalar, bigfloat_exp, to_bigfloat


class SequenceKind(enum.Enum):
    BF = "BF"
    BL = "BL"


@dataclass(frozen=True)
class SequenceTerm:
    n: int
    value: Bicomplex
    kind: SequenceKind

    def to_json(self) -> dict:
        return {"n": self.n, "kind": self.kind.value, "value": self.value.to_json()}


@dataclass(frozen=True)
class BinetConstants:
    gamma_hat: Bicomplex
    delta_hat: Bicomplex


def _check_index(n: int) -> None:
    if n < 0:
        raise NegativeIndexError(f"sequence index must be >= 0, got {n}")


def bf(n: int, p: QParams) -> Bicomplex:
    _check_index(n)
    a, q = p.alpha, p.q
    return Bicomplex(*(a ** (n + k - 1) * q_integer(n + k, q) for k in range(4)))


def bl(n: int, p: QParams) -> Bicomplex:
    _check_index(n)
    a, q = p.alpha, p.q
    return Bicomplex(*(a ** (n + k) * (1 + q ** (n + k)) for k in range(4)))


def sequence_term(kind: SequenceKind, n: int, p: QParams) -> SequenceTerm:
    value = bf(n, p) if kind is SequenceKind.BF else bl(n, p)
    return SequenceTerm(n, value, kind)


def sequence_table(kind: SequenceKind, n_values, p: QParams) -> list[SequenceTerm]:
    return [sequence_term(kind, n, p) for n in n_values]


def _powers_element(x) -> Bicomplex:
    return Bicomplex(x**0, x, x**2, x**3)


def binet_constants(p: QParams) -> BinetConstants:
    return BinetConstants(_powers_element(p.alpha), _powers_element(p.alpha_q))


def bf_binet(n: int, p: QParams) -> Bicomplex:
    _check_index(n)
    c = binet_constants(p)
    a, b = p.alpha, p.alpha_q
    return (a**n * c.gamma_hat - b**n * c.delta_hat) / (a - b)


def bl_binet(n: int, p: QParams) -> Bicomplex:
    _check_index(n)
    c = binet_constants(p)
    a, b = p.alpha, p.alpha_q
    return a**n * c.gamma_hat + b**n * c.delta_hat


def classical_params() -> QParams:
    """Golden-ratio parameters: ``alpha = (1+sqrt5)/2`` and ``alpha*q = -1/alpha``."""
    return QParams(QuadExt(Fraction(1, 2), Fraction(1, 2), 5), QuadExt(Fraction(-3, 2), Fraction(1, 2), 5))


def fibonacci_numbers(count: int) -> list[int]:
    out, a, b = [], 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def lucas_numbers(count: int) -> list[int]:
    out, a, b = [], 2, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


# -- exponential generating function ---------------------------------------

def egf_partial(N: int, t, p: QParams) -> Bicomplex:
    """``sum_{n=0}^{N} bf(n) * t**n / n!``; exact for exact ``t``."""
    t = as_scalar(t)
    total = None
    power = None
    for n in range(N + 1):
        term = bf(n, p)
        if isinstance(t, BigFloat):
            term = term.to_bigfloat(t.prec)
            power = BigFloat(1, t.prec) if power is None else power * t
            term = term * (power / BigFloat(math.factorial(n), t.prec))
        else:
            power = t**0 if power is None else power * t
            term = term * (power / math.factorial(n))
        total = term if total is None else total + term
    return total


_GUARD_BITS = 64


def egf_closed(t, p: QParams, precision_bits: int) -> Bicomplex:
    """``(gamma_hat e^{alpha t} - delta_hat e^{alpha q t}) / (alpha - alpha q)`` in BigFloat."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    wp = precision_bits + _GUARD_BITS
    t = as_scalar(t)
    c = binet_constants(p)
    a, b = p.alpha, p.alpha_q
    if not isinstance(t, BigFloat) and not t:
        # e^0 = 1, so the closed form is exact here
        return ((c.gamma_hat - c.delta_hat) / (a - b)).to_bigfloat(precision_bits)
    if isinstance(t, BigFloat):
        at = to_bigfloat(a, wp) * to_bigfloat(t, wp)
        bt = to_bigfloat(b, wp) * to_bigfloat(t, wp)
    else:
        # exact products keep the exponent arguments correctly rounded
        at, bt = to_bigfloat(a * t, wp), to_bigfloat(b * t, wp)
    num = c.gamma_hat.to_bigfloat(wp) * bigfloat_exp(at) - c.delta_hat.to_bigfloat(wp) * bigfloat_exp(bt)
    value = num / to_bigfloat(a - b, wp)
    return value.to_bigfloat(precision_bits)


def _abs_mpf(x, prec: int):
    return abs(to_bigfloat(x, prec).value)


def egf_truncation_bound(N: int, t, p: QParams) -> BigFloat:
    """Upper bound on each coefficient of the tail ``sum_{n>N} bf(n) t^n/n!``.

    Each coefficient of ``bf(n)`` is at most ``2 M**n C / |alpha - alpha q|``
    with ``M = max(|alpha|, |alpha q|)`` and ``C`` the largest coefficient of
    gamma_hat and delta_hat, so the tail is bounded by the first omitted
    term times ``1 / (1 - x/(N+2))`` with ``x = M |t|``.
    """
    prec = 128
    with mpmath.workprec(prec):
        c = binet_constants(p)
        M = max(_abs_mpf(p.alpha, prec), _abs_mpf(p.alpha_q, prec))
        C = max(_abs_mpf(v, prec) for v in (*c.gamma_hat, *c.delta_hat))
        x = M * _abs_mpf(as_scalar(t), prec)
        first = 2 * C * x ** (N + 1) / (mpmath.factorial(N + 1) * _abs_mpf(p.alpha - p.alpha_q, prec))
        if x >= N + 2:
            return BigFloat(mpmath.inf, prec)
        bound = first / (1 - x / (N + 2))
        # absorb rounding in the bound itself
        return BigFloat(bound * (1 + mpmath.ldexp(1, -60)), prec)


def egf_error_bound(N: int, t, p: QParams, precision_bits: int) -> BigFloat:
    """Truncation bound plus a rounding allowance for comparing at ``precision_bits``.

    Both sides are rounded to ``precision_bits``; each coefficient has
    magnitude at most ``2 C e^{x} / |alpha - alpha q|``, so a few units in
    the last place of that magnitude cover the rounding of both.
    """
    prec = 128
    with mpmath.workprec(prec):
        c = binet_constants(p)
        M = max(_abs_mpf(p.alpha, prec), _abs_mpf(p.alpha_q, prec))
        C = max(_abs_mpf(v, prec) for v in (*c.gamma_hat, *c.delta_hat))
        x = M * _abs_mpf(as_scalar(t), prec)
        scale = 2 * C * mpmath.exp(x) / _abs_mpf(p.alpha - p.alpha_q, prec)
        rounding = scale * mpmath.ldexp(1, 4 - precision_bits)
        return BigFloat(egf_truncation_bound(N, t, p).value + rounding, prec)
