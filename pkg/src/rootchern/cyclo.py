"""Exact arithmetic in cyclotomic fields and the node-contribution identities.

Elements of Q(zeta_r) are coefficient vectors modulo the r-th cyclotomic
polynomial, which is computed exactly by recursive division of x^r - 1 by the
cyclotomic polynomials of the proper divisors.  Since the quotient is a field,
powers zeta^i with gcd(i, r) > 1 need no special subfield handling: 1 - zeta^i
is nonzero and inverted by the extended Euclidean algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import List, Tuple

__all__ = [
    "cyclotomic_polynomial",
    "CycloNumber",
    "TruncatedSeries",
    "cyclo_sum",
    "series_bridge_check",
    "geometric_coeff_check",
]


def _poly_trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: List[Fraction], b: List[Fraction]):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coeff = a[i + len(b) - 1] * inv_lead
        if coeff:
            q[i] = coeff
            for j, bj in enumerate(b):
                a[i + j] -= coeff * bj
    return _poly_trim(q), _poly_trim(a)


_cyclo_cache: dict = {}


def cyclotomic_polynomial(r: int) -> Tuple[Fraction, ...]:
    """Coefficients of Phi_r, constant term first, computed by dividing
    x^r - 1 by Phi_d for every proper divisor d of r."""
    if r < 1:
        raise ValueError("r must be positive")
    cached = _cyclo_cache.get(r)
    if cached is not None:
        return cached
    num = [Fraction(-1)] + [Fraction(0)] * (r - 1) + [Fraction(1)]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    result = tuple(num)
    _cyclo_cache[r] = result
    return result


@dataclass(frozen=True)
class CycloNumber:
    """Element of Q(zeta_r) as a polynomial in zeta reduced modulo Phi_r."""

    r: int
    coeffs: Tuple[Fraction, ...]

    @staticmethod
    def of(r: int, value) -> "CycloNumber":
        deg = len(cyclotomic_polynomial(r)) - 1
        c = [Fraction(0)] * deg
        c[0] = Fraction(value)
        return CycloNumber(r, tuple(c))

    @staticmethod
    def zeta(r: int, power: int = 1) -> "CycloNumber":
        phi = list(cyclotomic_polynomial(r))
        deg = len(phi) - 1
        p = [Fraction(0)] * (power % r) + [Fraction(1)]
        _, rem = _poly_divmod(p, phi)
        rem += [Fraction(0)] * (deg - len(rem))
        return CycloNumber(r, tuple(rem[:deg]))

    def _wrap(self, coeffs: List[Fraction]) -> "CycloNumber":
        deg = len(cyclotomic_polynomial(self.r)) - 1
        coeffs = list(coeffs) + [Fraction(0)] * deg
        return CycloNumber(self.r, tuple(coeffs[:deg]))

    def __add__(self, other: "CycloNumber") -> "CycloNumber":
        return self._wrap([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycloNumber") -> "CycloNumber":
        return self._wrap([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycloNumber":
        return self._wrap([-a for a in self.coeffs])

    def __mul__(self, other) -> "CycloNumber":
        if not isinstance(other, CycloNumber):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return self._wrap([a * Fraction(other) for a in self.coeffs])
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        _, rem = _poly_divmod(prod, list(cyclotomic_polynomial(self.r)))
        return self._wrap(rem)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def inverse(self) -> "CycloNumber":
        """Extended Euclidean inverse modulo Phi_r."""
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        phi = list(cyclotomic_polynomial(self.r))
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            qs = _poly_mul(q, s1)
            s0, s1 = s1, _poly_trim(
                [a - b for a, b in zip(s0 + [Fraction(0)] * len(qs), qs + [Fraction(0)] * len(s0))]
            )
        # r0 is a nonzero constant gcd
        scale = 1 / r0[0]
        return self._wrap([c * scale for c in s0])

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not a rational number: {self.coeffs}")
        return self.coeffs[0]


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def cyclo_sum(r: int, q: int) -> Fraction:
    """sum_{i=1}^{r-1} zeta^{qi} / ((1 - zeta^i)(1 - zeta^{-i})), which is a
    rational number equal to (r^2 - 1)/12 - q(r - q)/2."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if not 0 <= q < r:
        raise ValueError("q must lie in 0..r-1")
    one = CycloNumber.of(r, 1)
    total = CycloNumber.of(r, 0)
    for i in range(1, r):
        num = CycloNumber.zeta(r, q * i)
        den = (one - CycloNumber.zeta(r, i)) * (one - CycloNumber.zeta(r, -i))
        total = total + num * den.inverse()
    if not total.is_rational:
        raise ArithmeticError("cyclotomic node sum failed to be rational")
    return total.to_rational()


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series with CycloNumber coefficients, truncated."""

    r: int
    coeffs: Tuple[CycloNumber, ...]

    @staticmethod
    def exp(r: int, c, order: int) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(
            r,
            tuple(CycloNumber.of(r, c**j / factorial(j)) for j in range(order + 1)),
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            order = min(len(self.coeffs), len(other.coeffs)) - 1
            out = [CycloNumber.of(self.r, 0)] * (order + 1)
            for i, a in enumerate(self.coeffs[: order + 1]):
                if a:
                    for j in range(order + 1 - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] = out[i + j] + a * b
            return TruncatedSeries(self.r, tuple(out))
        return TruncatedSeries(self.r, tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Series inverse; the constant term must be a nonzero field element."""
        order = len(self.coeffs) - 1
        inv0 = self.coeffs[0].inverse()
        out = [inv0]
        for m in range(1, order + 1):
            s = CycloNumber.of(self.r, 0)
            for k in range(1, m + 1):
                s = s + self.coeffs[k] * out[m - k]
            out.append(-(inv0 * s))
        return TruncatedSeries(self.r, tuple(out))


def series_bridge_check(r: int, q: int, order: int) -> bool:
    """Check sum_{i=1}^{r-1} zeta^{qi}/(zeta^i e^x - 1) =
    r e^{((r-q) mod r) x}/(e^{rx} - 1) - 1/(e^x - 1) to the given truncation
    order.  (At q = 0 the exponent wraps to 0: the full sum over i = 0..r-1
    equals r/(e^{rx} - 1) and the i = 0 term is subtracted off.)

    Both sides are multiplied by e^{rx} - 1 first, which clears the poles:
    the right side becomes r e^{((r-q) mod r) x} - sum_{j=0}^{r-1} e^{jx}.
    """
    if r < 2 or not 0 <= q < r or order < 0:
        raise ValueError("need r >= 2, 0 <= q < r, order >= 0")
    one = TruncatedSeries(r, tuple([CycloNumber.of(r, 1)] + [CycloNumber.of(r, 0)] * order))
    e_rx_minus_1 = TruncatedSeries.exp(r, r, order) - one
    lhs = TruncatedSeries(r, tuple([CycloNumber.of(r, 0)] * (order + 1)))
    ex = TruncatedSeries.exp(r, 1, order)
    for i in range(1, r):
        den = CycloNumber.zeta(r, i) * ex - one
        lhs = lhs + CycloNumber.zeta(r, q * i) * (e_rx_minus_1 * den.inverse())
    rhs = r * TruncatedSeries.exp(r, (r - q) % r, order)
    for j in range(r):
        rhs = rhs - TruncatedSeries.exp(r, j, order)
    for a, b in zip(lhs.coeffs, rhs.coeffs):
        if not a.is_rational or a.to_rational() != b.to_rational():
            return False
    return True


def geometric_coeff_check(r: int) -> bool:
    """For each primitive power zeta^i, check the closed geometric-coefficient
    identity (1 - zeta^i) * sum_{d=1}^{r-1} (d/r) zeta^{id} = -1."""
    if r < 2:
        raise ValueError("r must be >= 2")
    one = CycloNumber.of(r, 1)
    for i in range(1, r):
        if gcd(i, r) != 1:
            continue
        total = CycloNumber.of(r, 0)
        for d in range(1, r):
            total = total + Fraction(d, r) * CycloNumber.zeta(r, i * d)
        value = (one - CycloNumber.zeta(r, i)) * total
        if not (value.is_rational and value.to_rational() == -1):
            return False
    return True
