"""q-integers and the (alpha, q) parameter pair."""
from __future__ import annotations

from dataclasses import dataclass

from .scalars import (
    BigFloat,
    MixedExactnessError,
    MixedRadicandError,
    QuadExt,
    as_scalar,
    format_scalar,
    one_like,
    parse_scalar,
    zero_like,
)


class InvalidParameters(ValueError):
    pass


class NegativeIndexError(ValueError):
    pass


class ZeroDenominatorError(ZeroDivisionError):
    pass


def q_integer(n: int, q):
    """``[n]_q = (1 - q**n) / (1 - q)``, equal to ``n`` at ``q = 1``."""
    if n < 0:
        raise NegativeIndexError(f"q-integer index must be >= 0, got {n}")
    q = as_scalar(q)
    one = one_like(q)
    if q == 1:
        return one * n if not isinstance(q, BigFloat) else BigFloat(n, q.prec)
    return (one - q**n) / (one - q)


def q_integer_sum(n: int, q):
    """``[n]_q`` as the finite sum ``1 + q + ... + q**(n-1)``."""
    if n < 0:
        raise NegativeIndexError(f"q-integer index must be >= 0, got {n}")
    q = as_scalar(q)
    total = zero_like(q)
    power = one_like(q)
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_index_add_check(m: int, n: int, q) -> bool:
    """Check ``[m+n]_q == [m]_q + q**m [n]_q`` exactly."""
    q = as_scalar(q)
    return q_integer(m + n, q) == q_integer(m, q) + q**m * q_integer(n, q)


def q_lucas_ratio(n: int, q):
    """``[2n]_q / [n]_q`` in its reduced form ``1 + q**n``.

    Raises ZeroDenominatorError when ``[n]_q`` vanishes, since the ratio
    is then undefined even though ``1 + q**n`` is not.
    """
    if n < 1:
        raise NegativeIndexError(f"ratio index must be >= 1, got {n}")
    q = as_scalar(q)
    if not q_integer(n, q):
        raise ZeroDenominatorError(f"[{n}]_q vanishes at q = {format_scalar(q)}")
    return one_like(q) + q**n


@dataclass(frozen=True)
class QParams:
    """Concrete exact values of ``alpha`` and ``q`` (``q != 1``, ``alpha != 0``)."""

    alpha: object
    q: object

    def __post_init__(self):
        alpha, q = as_scalar(self.alpha), as_scalar(self.q)
        if isinstance(alpha, BigFloat) or isinstance(q, BigFloat):
            raise MixedExactnessError("QParams takes exact scalars only")
        if isinstance(alpha, QuadExt) and isinstance(q, QuadExt) and alpha.d != q.d:
            raise MixedRadicandError(f"alpha uses sqrt{alpha.d} but q uses sqrt{q.d}")
        if q == 1:
            raise InvalidParameters("q = 1 is singular (every closed form divides by 1 - q)")
        if not alpha:
            raise InvalidParameters("alpha = 0 is singular (alpha**(n-1) at n = 0)")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "q", q)

    @property
    def alpha_q(self):
        return self.alpha * self.q

    @classmethod
    def parse(cls, alpha: str, q: str, radicand: int | None = None) -> QParams:
        return cls(parse_scalar(alpha, radicand), parse_scalar(q, radicand))

    def to_json(self) -> dict:
        return {"alpha": format_scalar(self.alpha), "q": format_scalar(self.q)}

    def __str__(self) -> str:
        return f"alpha={format_scalar(self.alpha)}, q={format_scalar(self.q)}"
