"""
Exact scalars: Bernoulli numbers, binomials and rational zeta values.

Rationals are ``fractions.Fraction`` throughout; it keeps every value in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["Rational", "bernoulli", "binomial", "zeta_even_rational"]

Rational = Fraction

_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def _extend_bernoulli(k: int) -> None:
    # sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= k:
            n = len(table)
            if n >= 3 and n % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j in range(n):
                if table[j]:
                    acc += math.comb(n + 1, j) * table[j]
            table.append(-acc / (n + 1))


def bernoulli(k: int) -> Fraction:
    """Return B_k with the convention t/(e^t - 1) = sum B_k t^k / k!, so B_1 = -1/2."""
    if k < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {k}")
    if len(_bernoulli_table) <= k:
        _extend_bernoulli(k)
    return _bernoulli_table[k]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def zeta_even_rational(m: int) -> Fraction:
    """Rational q such that zeta(2m) = q * pi^(2m)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    sign = 1 if m % 2 == 1 else -1
    return sign * Fraction(2 ** (2 * m)) * bernoulli(2 * m) / (2 * math.factorial(2 * m))
