"""
Mean values of products of Dirichlet L-values at positive integers.

Every result is normalized to

    M(m_vec, f) = pi^P * sum_l c_l * phi_l(f) / f^(P - l),    P = sum(m_vec),

so the general pipeline and the individual closed forms can be compared
as plain dictionaries of rationals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import mpmath

from .arith import phi_l
from .errors import ParityError
from .exact import bernoulli, binomial, zeta_even_rational
from .series import r_polynomial, validate_m_vec

__all__ = [
    "MeanValueFormula",
    "IdentityReport",
    "mean_value",
    "mean_value_single",
    "mean_value_pair",
    "mean_value_all_ones",
    "c_coefficient",
    "partitions_as_multiplicities",
    "evaluate_exact",
    "evaluate_numeric",
    "check_bernoulli_identity",
]


@dataclass(frozen=True)
class MeanValueFormula:
    m_vec: tuple[int, ...]
    pi_power: int
    terms: Mapping[int, Fraction] = field(compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_vec", tuple(self.m_vec))
        cleaned = {int(l): Fraction(c) for l, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", dict(sorted(cleaned.items(), reverse=True)))

    def check_invariants(self) -> None:
        """Raise AssertionError if the canonical shape is violated."""
        P = self.pi_power
        if P != sum(self.m_vec) or P % 2:
            raise AssertionError(f"pi power {P} inconsistent with {self.m_vec}")
        if self.terms.get(P) != zeta_even_rational(P // 2):
            raise AssertionError(f"leading coefficient {self.terms.get(P)} is not zeta({P})/pi^{P}")
        all_ones = all(m == 1 for m in self.m_vec)
        for l in self.terms:
            if l % 2 and not (l == 1 and all_ones):
                raise AssertionError(f"unexpected odd index {l} in {self.m_vec}")
            if not 1 <= l <= P:
                raise AssertionError(f"index {l} out of range for P = {P}")

    def same_terms(self, other: MeanValueFormula) -> bool:
        return self.pi_power == other.pi_power and dict(self.terms) == dict(other.terms)

    def to_dict(self) -> dict:
        return {
            "m_vec": list(self.m_vec),
            "pi_power": self.pi_power,
            "terms": [
                {"l": l, "num": str(c.numerator), "den": str(c.denominator)}
                for l, c in self.terms.items()
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> MeanValueFormula:
        terms = {int(t["l"]): Fraction(int(t["num"]), int(t["den"])) for t in doc["terms"]}
        return cls(tuple(int(m) for m in doc["m_vec"]), int(doc["pi_power"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> MeanValueFormula:
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        """Human-readable form, e.g. ``pi^4/90 * ( phi_4(f) - 5*phi_2(f)/f^2 )``."""
        P = self.pi_power
        lead = self.terms.get(P)
        if not lead:
            return "0"
        if lead.numerator == 1:
            prefix = f"pi^{P}/{lead.denominator}"
        elif lead.denominator == 1:
            prefix = f"{lead.numerator}*pi^{P}"
        else:
            prefix = f"{lead.numerator}*pi^{P}/{lead.denominator}"
        pieces = []
        for l, c in self.terms.items():
            rel = c / lead
            body = f"phi_{l}(f)"
            gap = P - l
            if gap == 1:
                body += "/f"
            elif gap > 1:
                body += f"/f^{gap}"
            mag = abs(rel)
            if mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if rel < 0 else "+"
            if not pieces:
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f"{sign} {body}")
        return f"{prefix} * ( {' '.join(pieces)} )"


def _factorial_product(m_vec: Sequence[int]) -> int:
    out = 1
    for m in m_vec:
        out *= math.factorial(m - 1)
    return out


def mean_value(m_vec: Sequence[int]) -> MeanValueFormula:
    """General formula for M(m_vec, f) from the residue polynomial R."""
    m_vec = validate_m_vec(m_vec)
    n = len(m_vec)
    r = r_polynomial(m_vec)
    scale = Fraction((-1) ** n, 2 * _factorial_product(m_vec))
    # the constant term of R is annihilated by the Moebius sum
    terms = {l: c * scale for l, c in enumerate(r.coeffs) if l >= 1}
    formula = MeanValueFormula(m_vec, sum(m_vec), terms)
    formula.check_invariants()
    return formula


def mean_value_single(m: int) -> MeanValueFormula:
    """Closed form for the mean of |L(m, chi)|^2 over characters of the parity of m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return MeanValueFormula((1, 1), 2, {2: Fraction(1, 6), 1: Fraction(-1, 2)})
    zeta = zeta_even_rational(m)
    sign = (-1) ** (m - 1)
    terms = {2 * m: zeta}
    for k in range(1, m // 2 + 1):
        inner = (
            sign
            * binomial(2 * m, m)
            * Fraction(m, m - k)
            * binomial(m, 2 * k)
            * bernoulli(2 * k)
            * bernoulli(2 * (m - k))
            / bernoulli(2 * m)
        )
        terms[2 * k] = terms.get(2 * k, 0) + zeta * inner
    return MeanValueFormula((m, m), 2 * m, terms)


def mean_value_pair(m: int, n: int) -> MeanValueFormula:
    """Closed form for the mean of L(m, chi) * conj(L(n, chi)), m and n of equal parity."""
    if m < 1 or n < 1:
        raise ValueError(f"exponents must be positive, got ({m}, {n})")
    if (m - n) % 2:
        raise ParityError(f"({m}, {n}) have different parity")
    if (m, n) == (1, 1):
        raise ValueError("(1, 1) is outside the two-sum closed form; use mean_value_single(1)")
    w = m + n
    zeta = zeta_even_rational(w // 2)
    b_w = bernoulli(w)
    terms: dict[int, Fraction] = {w: zeta}

    def add_side(a: int, b: int) -> None:
        sign = (-1) ** (a - 1)
        for k in range(1, a // 2 + 1):
            inner = (
                sign
                * binomial(w, a)
                * Fraction(b, w - 2 * k)
                * binomial(a, 2 * k)
                * bernoulli(2 * k)
                * bernoulli(w - 2 * k)
                / b_w
            )
            terms[2 * k] = terms.get(2 * k, 0) + zeta * inner

    add_side(m, n)
    add_side(n, m)
    return MeanValueFormula((m, n), w, terms)


def partitions_as_multiplicities(N: int) -> Iterator[tuple[int, ...]]:
    """Yield (e_1, ..., e_N) with e_1 + 2 e_2 + ... + N e_N = N."""

    def rec(part: int, remaining: int) -> Iterator[list[int]]:
        if part == 0:
            if remaining == 0:
                yield []
            return
        for e in range(remaining // part + 1):
            for rest in rec(part - 1, remaining - e * part):
                yield rest + [e]

    for vec in rec(N, N):
        yield tuple(vec)


def c_coefficient(n: int, N: int) -> Fraction:
    """Sum over partitions of N of n!/(n - #parts)! * prod (B_2l/(2l)!)^e_l / e_l!."""
    if N < 1 or N > n:
        raise ValueError(f"need 1 <= N <= n, got n={n}, N={N}")
    total = Fraction(0)
    for e in partitions_as_multiplicities(N):
        parts = sum(e)
        term = Fraction(math.factorial(n), math.factorial(n - parts))
        for l, el in enumerate(e, start=1):
            if el:
                term *= (bernoulli(2 * l) / math.factorial(2 * l)) ** el / math.factorial(el)
        total += term
    return total


def mean_value_all_ones(n: int) -> MeanValueFormula:
    """Closed form for M((1, ..., 1), f) with n ones, n even."""
    if n < 2 or n % 2:
        raise ParityError(f"n must be even and at least 2, got {n}")
    zeta = zeta_even_rational(n // 2)
    scale = Fraction(math.factorial(n)) / bernoulli(n)
    terms: dict[int, Fraction] = {n: zeta}
    for k0 in range(1, n // 2):
        terms[2 * k0] = (
            zeta
            * scale
            * c_coefficient(n, n // 2 - k0)
            * bernoulli(2 * k0)
            / math.factorial(2 * k0)
        )
    terms[1] = Fraction((-1) ** (n // 2), 2)
    return MeanValueFormula((1,) * n, n, terms)


def evaluate_exact(formula: MeanValueFormula, f: int) -> Fraction:
    """Rational q with M(m_vec, f) = q * pi^P."""
    if f <= 2:
        raise ValueError(f"modulus must exceed 2, got {f}")
    P = formula.pi_power
    return sum(
        (c * phi_l(f, l) / Fraction(f) ** (P - l) for l, c in formula.terms.items()),
        Fraction(0),
    )


def evaluate_numeric(formula: MeanValueFormula, f: int, precision_bits: int = 256):
    """The mean value as an mpmath real carrying ``precision_bits`` bits."""
    if precision_bits < 64:
        raise ValueError(f"precision must be at least 64 bits, got {precision_bits}")
    q = evaluate_exact(formula, f)
    with mpmath.workprec(precision_bits + 32):
        value = mpmath.mpf(q.numerator) / q.denominator * mpmath.pi**formula.pi_power
    with mpmath.workprec(precision_bits):
        return +value


@dataclass(frozen=True)
class IdentityReport:
    m: int
    n: int
    lhs: Fraction
    rhs: Fraction
    paper_sign_matches: bool
    corrected_sign_matches: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "lhs": f"{self.lhs.numerator}/{self.lhs.denominator}",
            "rhs": f"{self.rhs.numerator}/{self.rhs.denominator}",
            "paper_sign_matches": self.paper_sign_matches,
            "corrected_sign_matches": self.corrected_sign_matches,
        }


def check_bernoulli_identity(m: int, n: int) -> IdentityReport:
    """
    Compare B_(m+n) with +-C(m+n, n) * D, where

        D = sum_{a<=m, b<=n} C(m,a) C(n,b) B_(m-a) B_(n-b) / (a+b+1).

    ``rhs`` holds D itself.  The sign (-1)^n is the one printed alongside
    the two-term identity; (-1)^(n-1) is what matching the leading term
    against zeta(m+n) actually forces.
    """
    if m < 1 or n < 1:
        raise ValueError(f"exponents must be positive, got ({m}, {n})")
    if (m - n) % 2:
        raise ParityError(f"({m}, {n}) have different parity")
    d = Fraction(0)
    for a in range(m + 1):
        for b in range(n + 1):
            d += (
                binomial(m, a)
                * binomial(n, b)
                * bernoulli(m - a)
                * bernoulli(n - b)
                / (a + b + 1)
            )
    lhs = bernoulli(m + n)
    c = binomial(m + n, n)
    return IdentityReport(
        m=m,
        n=n,
        lhs=lhs,
        rhs=d,
        paper_sign_matches=lhs == (-1) ** n * c * d,
        corrected_sign_matches=lhs == (-1) ** (n - 1) * c * d,
    )
