"""
Polynomials over Q and truncated even power series with polynomial coefficients.

The residue of d*cot(dz) * prod cot^(m_l - 1)(z) at z = 0 is a polynomial
in d.  It is read off as one coefficient of a product of power series in
z^2 whose coefficients are polynomials in X (X standing for d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArityError, ParityError
from .exact import bernoulli, binomial

__all__ = [
    "PolyQ",
    "SeriesPQ",
    "cot_core_series",
    "scaled_cot_core_series",
    "cot_derivative_series",
    "series_mul",
    "validate_m_vec",
    "t_leading_coefficient",
    "t_polynomial",
    "r_polynomial",
    "r_m_closed",
]


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class PolyQ:
    """Dense univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        self._coeffs = _trim(coeffs)

    @classmethod
    def constant(cls, c) -> PolyQ:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> PolyQ:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> PolyQ:
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._coeffs[1::2])

    def derivative(self) -> PolyQ:
        return PolyQ(k * c for k, c in enumerate(self._coeffs) if k)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self._coeffs):
                acc = acc * x + c
            return acc
        # inexact argument: Horner on integer numerators over a common denominator
        den = math.lcm(*(c.denominator for c in self._coeffs)) if self._coeffs else 1
        acc = 0 * x
        for c in reversed(self._coeffs):
            acc = acc * x + c.numerator * (den // c.denominator)
        return acc / den

    def __add__(self, other) -> PolyQ:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return PolyQ(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self._coeffs)

    def __sub__(self, other) -> PolyQ:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PolyQ:
        return (-self) + other

    def __mul__(self, other) -> PolyQ:
        if isinstance(other, (int, Fraction)):
            return PolyQ(c * other for c in self._coeffs)
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return PolyQ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyQ(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(other):
    if isinstance(other, PolyQ):
        return other
    if isinstance(other, (int, Fraction)):
        return PolyQ.constant(other)
    return NotImplemented


@dataclass(frozen=True)
class SeriesPQ:
    """Truncated series sum_j coefficients[j] * z^(2j), exact through z^(2*order)."""

    coefficients: tuple[PolyQ, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> PolyQ:
        return self.coefficients[j]

    def truncate(self, order: int) -> SeriesPQ:
        return SeriesPQ(self.coefficients[: order + 1])

    @classmethod
    def from_constants(cls, values: Sequence) -> SeriesPQ:
        return cls(tuple(PolyQ.constant(v) for v in values))

    def __mul__(self, other: SeriesPQ) -> SeriesPQ:
        return series_mul(self, other)


def _cot_core_coefficient(j: int) -> Fraction:
    sign = -1 if j % 2 else 1
    return sign * Fraction(2 ** (2 * j)) * bernoulli(2 * j) / math.factorial(2 * j)


def cot_core_series(order: int) -> SeriesPQ:
    """Series of z*cot(z) in powers of z^2."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    return SeriesPQ.from_constants([_cot_core_coefficient(j) for j in range(order + 1)])


def scaled_cot_core_series(order: int) -> SeriesPQ:
    """Series of d*z*cot(d*z), with the polynomial variable X standing for d."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    return SeriesPQ(
        tuple(PolyQ.monomial(2 * j, _cot_core_coefficient(j)) for j in range(order + 1))
    )


def cot_derivative_series(m: int, order: int) -> SeriesPQ:
    """Series of z^m * cot^(m-1)(z) in powers of z^2."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    values = [Fraction((-1) ** (m - 1) * math.factorial(m - 1))]
    for j in range(1, order + 1):
        if 2 * j < m:
            values.append(Fraction(0))
            continue
        sign = -1 if j % 2 else 1
        values.append(
            sign
            * Fraction(2 ** (2 * j))
            * bernoulli(2 * j)
            / (2 * j * math.factorial(2 * j - m))
        )
    return SeriesPQ.from_constants(values)


def series_mul(a: SeriesPQ, b: SeriesPQ) -> SeriesPQ:
    order = min(a.order, b.order)
    out = []
    for k in range(order + 1):
        acc = PolyQ()
        for i in range(k + 1):
            ai = a.coefficients[i]
            bj = b.coefficients[k - i]
            if not ai.is_zero() and not bj.is_zero():
                acc = acc + ai * bj
        out.append(acc)
    return SeriesPQ(tuple(out))


def validate_m_vec(m_vec: Sequence[int]) -> tuple[int, ...]:
    """Check arity, positivity and even total; returns the vector as a tuple."""
    m_vec = tuple(int(m) for m in m_vec)
    if len(m_vec) < 2:
        raise ArityError(f"need at least two exponents, got {len(m_vec)}")
    if any(m < 1 for m in m_vec):
        raise ValueError(f"exponents must be positive, got {m_vec}")
    if sum(m_vec) % 2:
        raise ParityError(f"exponent sum {sum(m_vec)} is odd")
    return m_vec


def t_leading_coefficient(m_vec: Sequence[int]) -> Fraction:
    """(-1)^(s-n) 2^(2s) B_2s / (2s)! * prod (m_l - 1)!, computed independently of the series."""
    m_vec = validate_m_vec(m_vec)
    s, n = sum(m_vec) // 2, len(m_vec)
    lead = (-1 if (s - n) % 2 else 1) * Fraction(2 ** (2 * s)) * bernoulli(2 * s) / math.factorial(2 * s)
    for m in m_vec:
        lead *= math.factorial(m - 1)
    return lead


def t_polynomial(m_vec: Sequence[int]) -> PolyQ:
    """Residue at z = 0 of d*cot(dz) * prod cot^(m_l - 1)(z), as a polynomial in d."""
    m_vec = validate_m_vec(m_vec)
    s = sum(m_vec) // 2
    product = scaled_cot_core_series(s)
    for m in m_vec:
        product = series_mul(product, cot_derivative_series(m, s))
    t = product[s]
    if t.degree != 2 * s or not t.is_even():
        raise AssertionError(f"T{m_vec} is not an even polynomial of degree {2 * s}: {t}")
    if t.leading() != t_leading_coefficient(m_vec):
        raise AssertionError(f"T{m_vec} has unexpected leading coefficient {t.leading()}")
    return t


def r_polynomial(m_vec: Sequence[int]) -> PolyQ:
    """Polynomial R with R(d) = sum_{k=1}^{d-1} prod cot^(m_l - 1)(k pi / d) for d >= 2."""
    m_vec = validate_m_vec(m_vec)
    r = -t_polynomial(m_vec)
    if all(m == 1 for m in m_vec):
        # nonzero horizontal-side limit of the contour integral
        r = r + PolyQ.monomial(1, (-1) ** (len(m_vec) // 2))
    if r(1) != 0:
        raise AssertionError(f"R{m_vec}(1) = {r(1)}, expected 0")
    return r


def r_m_closed(m: int) -> PolyQ:
    """Closed form of R_m(X), whose value at d >= 2 is sum_{k=1}^{d-1} cot^(m-1)(k pi/d)^2."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return PolyQ((Fraction(2, 3), Fraction(-1), Fraction(1, 3)))
    coeffs = [Fraction(0)] * (2 * m + 1)
    coeffs[2 * m] = (-1) ** (m - 1) * bernoulli(2 * m) / (m * m * binomial(2 * m, m))
    for k in range(m // 2 + 1):
        coeffs[2 * k] += (
            bernoulli(2 * k) * bernoulli(2 * (m - k)) / (m * (m - k)) * binomial(m, 2 * k)
        )
    if m % 2 == 0:
        coeffs[0] -= bernoulli(m) ** 2 / (m * m)
    return PolyQ(c * 2 ** (2 * m) for c in coeffs)
