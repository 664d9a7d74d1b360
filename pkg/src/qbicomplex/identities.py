"""Product identities for q-Fibonacci bicomplex sequences.

Each identity has a left side built from ``bf`` products, a closed-form right
side in terms of the Binet constants, and an oracle that recomputes the left
side from scratch (sum-form q-integers, unit multiplication table) so that a
disagreement between lhs and oracle points at this code rather than at the
closed form.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .bicomplex import Bicomplex, bc_mul
from .qcalc import QParams, q_integer_sum
from .scalars import one_like, zero_like
from .sequences import bf, binet_constants


class ZeroQError(ValueError):
    pass


class IndexRangeError(ValueError):
    pass


class IdentityName(enum.Enum):
    HONSBERGER = "Honsberger"
    DOCAGNE = "DOcagne"
    CASSINI = "Cassini"
    CATALAN = "Catalan"


class Verdict(enum.Enum):
    EXACT_MATCH = "ExactMatch"
    MISMATCH = "Mismatch"
    SKIPPED = "Skipped"


@lru_cache(maxsize=8192)
def _bf(n: int, p: QParams) -> Bicomplex:
    return bf(n, p)


@lru_cache(maxsize=256)
def _gamma_delta(p: QParams) -> tuple[Bicomplex, Bicomplex, Bicomplex]:
    c = binet_constants(p)
    return c.gamma_hat, c.delta_hat, bc_mul(c.gamma_hat, c.delta_hat)


def _require_nonzero_q(p: QParams) -> None:
    if not p.q:
        raise ZeroQError("identity involves q**-1; q = 0 is excluded")


# -- left sides ---------------------------------------------------------------

def honsberger_lhs(n: int, m: int, p: QParams) -> Bicomplex:
    return _bf(n, p) * _bf(m, p) + _bf(n + 1, p) * _bf(m + 1, p)


def docagne_lhs(n: int, m: int, p: QParams) -> Bicomplex:
    return _bf(m, p) * _bf(n + 1, p) - _bf(m + 1, p) * _bf(n, p)


def cassini_lhs(n: int, p: QParams) -> Bicomplex:
    if n < 1:
        raise IndexRangeError("Cassini identity needs n >= 1")
    return _bf(n + 1, p) * _bf(n - 1, p) - _bf(n, p) * _bf(n, p)


def catalan_lhs(n: int, r: int, p: QParams) -> Bicomplex:
    if not 0 <= r <= n:
        raise IndexRangeError(f"Catalan identity needs 0 <= r <= n, got n={n}, r={r}")
    return _bf(n + r, p) * _bf(n - r, p) - _bf(n, p) * _bf(n, p)


# -- closed right sides -------------------------------------------------------

def honsberger_rhs(n: int, m: int, p: QParams) -> Bicomplex:
    """Closed form with the squared denominator and squared Binet constants."""
    g, d, gd = _gamma_delta(p)
    a, b, q = p.alpha, p.alpha_q, p.q
    inner = (
        (1 + a * a) * (g * g)
        - ((1 + a * b) * (q**n + q**m)) * gd
        + ((1 + b * b) * q ** (n + m)) * (d * d)
    )
    return inner * (a ** (n + m) / (a - b) ** 2)


def honsberger_rhs_printed(n: int, m: int, p: QParams) -> Bicomplex:
    """The commonly typeset variant: single denominator and unsquared gamma_hat.

    Kept only to report how far it is from the left side.
    """
    g, d, gd = _gamma_delta(p)
    a, b, q = p.alpha, p.alpha_q, p.q
    inner = (
        (1 + a * a) * g
        - ((1 + a * b) * (q**n + q**m)) * gd
        + ((1 + b * b) * q ** (n + m)) * (d * d)
    )
    return inner * (a ** (n + m) / (a - b))


def docagne_rhs(n: int, m: int, p: QParams) -> Bicomplex:
    _, _, gd = _gamma_delta(p)
    a, q = p.alpha, p.q
    return gd * (a ** (n + m - 1) * (q**n - q**m) / (1 - q))


def cassini_rhs(n: int, p: QParams) -> Bicomplex:
    if n < 1:
        raise IndexRangeError("Cassini identity needs n >= 1")
    _require_nonzero_q(p)
    _, _, gd = _gamma_delta(p)
    a, q = p.alpha, p.q
    return gd * (a ** (2 * n - 2) * q**n * (1 - q**-1) / (1 - q))


def catalan_rhs(n: int, r: int, p: QParams) -> Bicomplex:
    if not 0 <= r <= n:
        raise IndexRangeError(f"Catalan identity needs 0 <= r <= n, got n={n}, r={r}")
    _require_nonzero_q(p)
    _, _, gd = _gamma_delta(p)
    a, q = p.alpha, p.q
    return gd * (a ** (2 * n - 2) * q**n * (1 - q**r) * (1 - q**-r) / (1 - q) ** 2)


# -- brute-force oracle -------------------------------------------------------

# product of basis units e_k * e_l = sign * e_idx, basis order (1, i, j, ij)
UNIT_TABLE = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 3), (-1, 2), (-1, 1), (1, 0)),
)


def table_product(x: Bicomplex, y: Bicomplex) -> Bicomplex:
    """Bilinear expansion of ``x * y`` over the unit table."""
    out = [zero_like(x.c0)] * 4
    for k, xk in enumerate(x.coeffs):
        for l, yl in enumerate(y.coeffs):
            sign, idx = UNIT_TABLE[k][l]
            out[idx] = out[idx] + xk * yl if sign > 0 else out[idx] - xk * yl
    return Bicomplex(*out)


def _alpha_power(alpha, e: int):
    out = one_like(alpha)
    if e < 0:
        return out / alpha ** (-e)
    for _ in range(e):
        out = out * alpha
    return out


def oracle_bf(n: int, p: QParams) -> Bicomplex:
    """``bf`` from the sum form of the q-integer and repeated multiplication."""
    return Bicomplex(*(_alpha_power(p.alpha, n + k - 1) * q_integer_sum(n + k, p.q) for k in range(4)))


def _oracle_cache(p: QParams):
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = oracle_bf(n, p)
        return cache[n]

    return get


def honsberger_oracle(n: int, m: int, p: QParams) -> Bicomplex:
    f = _oracle_cache(p)
    return table_product(f(n), f(m)) + table_product(f(n + 1), f(m + 1))


def docagne_oracle(n: int, m: int, p: QParams) -> Bicomplex:
    f = _oracle_cache(p)
    return table_product(f(m), f(n + 1)) - table_product(f(m + 1), f(n))


def cassini_oracle(n: int, p: QParams) -> Bicomplex:
    f = _oracle_cache(p)
    return table_product(f(n + 1), f(n - 1)) - table_product(f(n), f(n))


def catalan_oracle(n: int, r: int, p: QParams) -> Bicomplex:
    f = _oracle_cache(p)
    return table_product(f(n + r), f(n - r)) - table_product(f(n), f(n))


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    name: IdentityName
    indices: tuple
    params: QParams
    lhs: Bicomplex | None
    rhs_closed: Bicomplex | None
    rhs_oracle: Bicomplex | None
    verdict: Verdict
    rhs_printed: Bicomplex | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        def enc(v):
            return None if v is None else v.to_json()

        out = {
            "name": self.name.value,
            "indices": list(self.indices),
            "params": self.params.to_json(),
            "lhs": enc(self.lhs),
            "rhs_closed": enc(self.rhs_closed),
            "rhs_oracle": enc(self.rhs_oracle),
            "verdict": self.verdict.value,
        }
        if self.rhs_printed is not None:
            out["rhs_printed"] = enc(self.rhs_printed)
        if self.reason is not None:
            out["reason"] = self.reason
        return out


_FORMS = {
    IdentityName.HONSBERGER: (honsberger_lhs, honsberger_rhs, honsberger_oracle),
    IdentityName.DOCAGNE: (docagne_lhs, docagne_rhs, docagne_oracle),
    IdentityName.CASSINI: (cassini_lhs, cassini_rhs, cassini_oracle),
    IdentityName.CATALAN: (catalan_lhs, catalan_rhs, catalan_oracle),
}


def check_identity(name: IdentityName, indices: tuple, p: QParams) -> IdentityReport:
    """Evaluate one identity; precondition failures come back as SKIPPED."""
    lhs_fn, rhs_fn, oracle_fn = _FORMS[name]
    try:
        if name in (IdentityName.CASSINI, IdentityName.CATALAN):
            _require_nonzero_q(p)
        lhs = lhs_fn(*indices, p)
        rhs = rhs_fn(*indices, p)
        oracle = oracle_fn(*indices, p)
    except (ArithmeticError, ValueError) as exc:
        return IdentityReport(name, tuple(indices), p, None, None, None, Verdict.SKIPPED,
                              reason=f"{type(exc).__name__}: {exc}")
    verdict = Verdict.EXACT_MATCH if lhs == rhs else Verdict.MISMATCH
    printed = None
    if name is IdentityName.HONSBERGER:
        alt = honsberger_rhs_printed(*indices, p)
        if alt != rhs:
            printed = alt
    return IdentityReport(name, tuple(indices), p, lhs, rhs, oracle, verdict, rhs_printed=printed)


def grid_cases(n_max: int, m_max: int, *, n_min: int = 0, m_min: int = 0,
               r_min: int = 0, r_max: int | None = None):
    """Yield ``(name, indices)`` in report order, for one parameter pair."""
    ns = range(n_min, n_max + 1)
    for name in (IdentityName.HONSBERGER, IdentityName.DOCAGNE):
        for n in ns:
            for m in range(m_min, m_max + 1):
                yield name, (n, m)
    for n in ns:
        if n >= 1:
            yield IdentityName.CASSINI, (n,)
    for n in ns:
        top = n if r_max is None else min(n, r_max)
        for r in range(r_min, top + 1):
            yield IdentityName.CATALAN, (n, r)


def verify_grid(params_list, n_max: int, m_max: int, *, n_min: int = 0, m_min: int = 0,
                r_min: int = 0, r_max: int | None = None) -> list[IdentityReport]:
    """Check all four identities over a grid; ordered by (identity, params, n, m/r)."""
    cases = list(grid_cases(n_max, m_max, n_min=n_min, m_min=m_min, r_min=r_min, r_max=r_max))
    reports = []
    for name in IdentityName:
        for p in params_list:
            for case_name, indices in cases:
                if case_name is name:
                    reports.append(check_identity(name, indices, p))
    return reports


def summarize(reports) -> dict:
    counts = {"checked": 0, "matched": 0, "mismatched": 0, "skipped": 0}
    for rep in reports:
        if rep.verdict is Verdict.SKIPPED:
            counts["skipped"] += 1
            continue
        counts["checked"] += 1
        if rep.verdict is Verdict.EXACT_MATCH:
            counts["matched"] += 1
        else:
            counts["mismatched"] += 1
    return counts
