"""Coefficient-field arithmetic.

Three scalar kinds are supported:

* ``fractions.Fraction`` for exact rationals,
* :class:`QuadExt` for elements ``a + b*sqrt(d)`` of a real quadratic field,
* :class:`BigFloat` for arbitrary-precision binary floats (series evaluation only).

Exact and floating values never mix implicitly; use :func:`to_bigfloat`.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

import mpmath

DEFAULT_RADICAND = 5


class ScalarError(ArithmeticError):
    pass


class MixedRadicandError(ScalarError):
    pass


class MixedExactnessError(ScalarError, TypeError):
    pass


class ScalarParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@lru_cache(maxsize=None)
def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadExt:
    """Exact element ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    ``d`` must be a square-free integer greater than one, so the pair
    ``(a, b)`` is a unique representation and equality is componentwise.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a=0, b=0, d: int = DEFAULT_RADICAND):
        if not isinstance(d, int) or not _is_squarefree(d):
            raise ValueError(f"radicand must be a square-free integer > 1, got {d!r}")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def __setattr__(self, name, value):
        if name in QuadExt.__slots__ and not hasattr(self, name):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("QuadExt is immutable")

    def __repr__(self) -> str:
        return f"QuadExt({self._a}, {self._b}, {self._d})"

    def __str__(self) -> str:
        return format_scalar(self)

    def _coerce(self, other) -> QuadExt:
        if isinstance(other, QuadExt):
            if other._d != self._d:
                raise MixedRadicandError(
                    f"cannot combine sqrt{self._d} and sqrt{other._d} values"
                )
            return other
        if isinstance(other, Rational):
            return QuadExt(other, 0, self._d)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def conjugate(self) -> QuadExt:
        return QuadExt(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - d*b^2``; zero only for the zero element."""
        return self._a * self._a - self._d * self._b * self._b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self._a + other._a, self._b + other._b, self._d)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadExt:
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self._a - other._a, self._b - other._b, self._d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self._a, self._b, other._a, other._b
        return QuadExt(a * c + self._d * b * e, a * e + b * c, self._d)

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> QuadExt:
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = QuadExt(1, 0, self._d)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if self._b == 0 and other._b == 0:
                return self._a == other._a
            return (self._d, self._a, self._b) == (other._d, other._a, other._b)
        if isinstance(other, Rational):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def __abs__(self) -> QuadExt:
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        n = self.norm()
        return sa if n > 0 else sb


class BigFloat:
    """Binary floating-point value carrying its own precision in bits.

    Arithmetic uses the larger precision of the two operands.  Combining a
    BigFloat with an exact scalar raises :class:`MixedExactnessError`.
    """

    __slots__ = ("value", "prec")

    def __init__(self, value, prec: int):
        with mpmath.workprec(prec):
            object.__setattr__(self, "value", mpmath.mpf(value))
        object.__setattr__(self, "prec", int(prec))

    def __setattr__(self, name, value):
        raise AttributeError("BigFloat is immutable")

    def __repr__(self) -> str:
        return f"BigFloat({format_scalar(self)!r}, prec={self.prec})"

    def __str__(self) -> str:
        return format_scalar(self)

    def _binop(self, other, op):
        if not isinstance(other, BigFloat):
            raise MixedExactnessError(
                f"cannot combine BigFloat with {type(other).__name__}; convert explicitly"
            )
        prec = max(self.prec, other.prec)
        with mpmath.workprec(prec):
            return BigFloat(op(self.value, other.value), prec)

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._binop(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binop(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._binop(other, lambda x, y: y * x)

    def __truediv__(self, other):
        if isinstance(other, BigFloat) and not other.value:
            raise ZeroDivisionError("division by zero")
        return self._binop(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        if not self.value:
            raise ZeroDivisionError("division by zero")
        return self._binop(other, lambda x, y: y / x)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and not self.value:
            raise ZeroDivisionError("zero to a negative power")
        with mpmath.workprec(self.prec):
            return BigFloat(self.value**n, self.prec)

    def __neg__(self) -> BigFloat:
        return BigFloat(-self.value, self.prec)

    def __pos__(self) -> BigFloat:
        return self

    def __abs__(self) -> BigFloat:
        return BigFloat(abs(self.value), self.prec)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __float__(self) -> float:
        return float(self.value)

    # Comparisons do not produce values, so plain numbers are accepted.
    def _cmp_value(self, other):
        if isinstance(other, BigFloat):
            return other.value
        if isinstance(other, (int, float)):
            return mpmath.mpf(other)
        if isinstance(other, Fraction):
            return mpmath.mpf(other.numerator) / other.denominator
        return None

    def __eq__(self, other):
        v = self._cmp_value(other)
        return NotImplemented if v is None else self.value == v

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other):
        v = self._cmp_value(other)
        return NotImplemented if v is None else self.value < v

    def __le__(self, other):
        v = self._cmp_value(other)
        return NotImplemented if v is None else self.value <= v

    def __gt__(self, other):
        v = self._cmp_value(other)
        return NotImplemented if v is None else self.value > v

    def __ge__(self, other):
        v = self._cmp_value(other)
        return NotImplemented if v is None else self.value >= v


ExactScalar = Union[Fraction, QuadExt]
Scalar = Union[Fraction, QuadExt, BigFloat]


def as_scalar(x) -> Scalar:
    """Normalise ints (and other Rationals) to Fraction; pass other scalars through."""
    if isinstance(x, (QuadExt, BigFloat, Fraction)):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"not a supported scalar: {x!r}")


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, QuadExt, int))


def _check_pair(x, y) -> None:
    if isinstance(x, BigFloat) != isinstance(y, BigFloat):
        raise MixedExactnessError("cannot mix exact and BigFloat scalars without conversion")
    if isinstance(x, QuadExt) and isinstance(y, QuadExt) and x.d != y.d:
        raise MixedRadicandError(f"cannot combine sqrt{x.d} and sqrt{y.d} values")


def scalar_add(x, y) -> Scalar:
    x, y = as_scalar(x), as_scalar(y)
    _check_pair(x, y)
    return x + y


def scalar_mul(x, y) -> Scalar:
    x, y = as_scalar(x), as_scalar(y)
    _check_pair(x, y)
    return x * y


def scalar_neg(x) -> Scalar:
    return -as_scalar(x)


def scalar_inv(x) -> Scalar:
    x = as_scalar(x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    if isinstance(x, QuadExt):
        return x.inverse()
    if isinstance(x, BigFloat):
        return BigFloat(1, x.prec) / x
    return 1 / x


def zero_like(x) -> Scalar:
    if isinstance(x, BigFloat):
        return BigFloat(0, x.prec)
    if isinstance(x, QuadExt):
        return QuadExt(0, 0, x.d)
    return Fraction(0)


def one_like(x) -> Scalar:
    if isinstance(x, BigFloat):
        return BigFloat(1, x.prec)
    if isinstance(x, QuadExt):
        return QuadExt(1, 0, x.d)
    return Fraction(1)


# -- text form -------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_TOKEN = re.compile(rf"\(\s*({_RAT})\s*\)|({_RAT})")


def format_scalar(x) -> str:
    """Render a scalar in the textual grammar, e.g. ``3/2`` or ``1/2+1/2*sqrt5``."""
    if isinstance(x, QuadExt):
        sign = "-" if x.b < 0 else "+"
        return f"{x.a}{sign}{abs(x.b)}*sqrt{x.d}"
    if isinstance(x, BigFloat):
        digits = int(x.prec * math.log10(2)) + 1
        with mpmath.workprec(x.prec):
            return mpmath.nstr(x.value, digits)
    if isinstance(x, Rational):
        return str(Fraction(x))
    raise TypeError(f"not a supported scalar: {x!r}")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def error(self, message: str) -> ScalarParseError:
        return ScalarParseError(message, self.text, self.pos)

    def rational(self) -> Fraction:
        self.skip_ws()
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            raise self.error("expected a rational number")
        body = m.group(1) or m.group(2)
        num, _, den = body.partition("/")
        if den and int(den) == 0:
            raise ScalarParseError("zero denominator", self.text, m.start() + body.index("/") + 1)
        self.pos = m.end()
        return Fraction(int(num), int(den) if den else 1)

    def literal(self, word: str) -> None:
        self.skip_ws()
        if not self.text.startswith(word, self.pos):
            raise self.error(f"expected {word!r}")
        self.pos += len(word)


def parse_scalar(text: str, radicand: int | None = None) -> ExactScalar:
    """Parse ``RAT`` or ``RAT (+|-) RAT*sqrtD`` into an exact scalar.

    Each rational may be wrapped in parentheses, so ``(-3/2)+(1/2)*sqrt5``
    is accepted.  If ``radicand`` is given, a surd with a different radicand
    raises :class:`MixedRadicandError`.
    """
    cur = _Cursor(text)
    a = cur.rational()
    if cur.at_end():
        return a
    op = cur.text[cur.pos]
    if op not in "+-":
        raise cur.error("expected '+' or '-'")
    cur.pos += 1
    b = cur.rational()
    if op == "-":
        b = -b
    cur.literal("*")
    cur.literal("sqrt")
    cur.skip_ws()
    m = re.compile(r"\d+").match(cur.text, cur.pos)
    if m is None:
        raise cur.error("expected radicand digits")
    d = int(m.group())
    if not _is_squarefree(d):
        raise ScalarParseError(
            "radicand must be a square-free integer > 1", text, m.start()
        )
    cur.pos = m.end()
    if not cur.at_end():
        raise cur.error("unexpected trailing input")
    if radicand is not None and d != radicand:
        raise MixedRadicandError(f"expected sqrt{radicand}, got sqrt{d}")
    return QuadExt(a, b, d)


# -- conversion to BigFloat ------------------------------------------------

def _floor_scaled(x: ExactScalar, k: int) -> tuple[int, bool]:
    """Return ``(floor(x * 2**k), exact)`` using integer arithmetic only."""
    scale = Fraction(2) ** k
    if isinstance(x, Fraction):
        v = x * scale
        return v.numerator // v.denominator, v.denominator == 1
    A, B = x.a * scale, x.b * scale
    Q = math.lcm(A.denominator, B.denominator)
    c = A.numerator * (Q // A.denominator)
    e = B.numerator * (Q // B.denominator)
    M = e * e * x.d
    s = math.isqrt(M)
    perfect = s * s == M
    if e >= 0:
        num = c + s
    else:
        num = c - s - (0 if perfect else 1)
    return num // Q, perfect and num % Q == 0


def _log2_estimate(x: ExactScalar) -> int:
    def lg(f: Fraction) -> int:
        return f.numerator.bit_length() - f.denominator.bit_length() if f else -(10**9)

    if isinstance(x, Fraction):
        return lg(x)
    return max(lg(x.a), lg(x.b) + (x.d.bit_length() + 1) // 2)


def to_bigfloat(x, precision_bits: int) -> BigFloat:
    """Correctly rounded (nearest) conversion of a scalar to ``precision_bits``."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    x = as_scalar(x)
    if isinstance(x, BigFloat):
        return BigFloat(x.value, precision_bits)
    if not x:
        return BigFloat(0, precision_bits)
    k = precision_bits + 2 - _log2_estimate(x)
    while True:
        F, exact = _floor_scaled(x, k)
        # need at least precision_bits + 2 significant bits for the sticky trick
        short = precision_bits + 2 - abs(F).bit_length()
        if short <= 0:
            break
        k += max(short, 8)
    if exact:
        man, exp = F, -k
    else:
        # x lies strictly inside (F, F+1) * 2**-k; the midpoint rounds identically
        man, exp = 2 * F + 1, -k - 1
    return _round_mpf(man, exp, precision_bits)


def _round_mpf(man: int, exp: int, prec: int) -> BigFloat:
    with mpmath.workprec(prec):
        return BigFloat(mpmath.mpf((man, exp)), prec)


def bigfloat_exp(x: BigFloat) -> BigFloat:
    """``exp(x)`` by Taylor series with argument halving.

    The series is summed at ``prec + s + 32`` bits, where ``s`` is the number
    of halvings, and stopped once the tail bound drops below one unit in the
    last working bit; the result is then rounded to ``x.prec``.
    """
    if not isinstance(x, BigFloat):
        raise MixedExactnessError("bigfloat_exp needs a BigFloat; use to_bigfloat first")
    prec = x.prec
    if not x.value:
        return BigFloat(1, prec)
    s = max(0, int(mpmath.mag(x.value)) + 8)
    wp = prec + s + 32
    with mpmath.workprec(wp):
        r = mpmath.ldexp(x.value, -s)
        ar = abs(r)
        eps = mpmath.ldexp(1, -wp)
        total = mpmath.mpf(1)
        term = mpmath.mpf(1)
        k = 0
        while True:
            k += 1
            term = term * r / k
            total += term
            # tail after term k is at most |term| * |r|/(k+1) / (1 - |r|/(k+2))
            if abs(term) * ar / (k + 1) * 2 < eps:
                break
        for _ in range(s):
            total = total * total
    return BigFloat(total, prec)
