"""Exact Bernoulli polynomials via the generating function t e^{tx} / (e^t - 1).

All arithmetic is over fractions.Fraction; there is no floating point anywhere.
Coefficient tables are memoized per degree.  The memo tables are filled
idempotently, so concurrent readers always observe identical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List

__all__ = [
    "BernoulliPolynomial",
    "bernoulli_poly",
    "bernoulli_eval",
    "bernoulli_number",
    "sum_q_rminusq",
]


# Coefficients of 1 / ((e^t - 1)/t) as a power series in t, extended on demand.
_inv_series: List[Fraction] = [Fraction(1)]


def _inv_series_to(order: int) -> List[Fraction]:
    """Series inverse of (e^t - 1)/t = sum t^k/(k+1)! up to the given order."""
    while len(_inv_series) <= order:
        m = len(_inv_series)
        s = Fraction(0)
        for k in range(1, m + 1):
            s += Fraction(1, factorial(k + 1)) * _inv_series[m - k]
        _inv_series.append(-s)
    return _inv_series[: order + 1]


@dataclass(frozen=True)
class BernoulliPolynomial:
    """B_n(x) with exact rational coefficients, constant term first."""

    degree: int
    coefficients: tuple

    def __call__(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


_poly_cache: dict = {}


def bernoulli_poly(n: int) -> BernoulliPolynomial:
    """The n-th Bernoulli polynomial.

    Coefficient of x^j is binom(n, j) * b_{n-j} where b_k = B_k(0), read off
    the exact series inverse of (e^t - 1)/t.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cached = _poly_cache.get(n)
    if cached is not None:
        return cached
    inv = _inv_series_to(n)
    # b_k = k! * inv[k]
    coeffs = tuple(
        comb(n, j) * factorial(n - j) * inv[n - j] for j in range(n + 1)
    )
    poly = BernoulliPolynomial(n, coeffs)
    _poly_cache[n] = poly
    return poly


def bernoulli_eval(n: int, x) -> Fraction:
    """Exact value B_n(x) for rational x."""
    return bernoulli_poly(n)(Fraction(x))


def bernoulli_number(n: int) -> Fraction:
    """B_n(0)."""
    return bernoulli_poly(n).coefficients[0]


def sum_q_rminusq(r: int) -> Fraction:
    """sum_{q=1}^{r-1} q(r-q), computed by direct summation.

    Equals (r-1)r(r+1)/6; the closed form is checked against this sum in the
    test suite, not assumed here.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return Fraction(sum(q * (r - q) for q in range(1, r)))
