"""Factorization, divisors, the Moebius function and the phi_l Euler factors."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .series import PolyQ

__all__ = [
    "PrimePower",
    "is_probable_prime",
    "factorize",
    "divisors",
    "moebius",
    "euler_phi",
    "phi_l",
    "moebius_transform",
    "coprime_residues",
]

# deterministic for n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class PrimePower(NamedTuple):
    prime: int
    exponent: int


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(f: int, trial_limit: int = 10**6) -> list[PrimePower]:
    """
    Prime factorization of ``f`` as (prime, exponent) pairs, primes increasing.

    Trial division up to ``trial_limit``; a leftover cofactor must then be
    certified prime by Miller-Rabin.
    """
    if f < 1:
        raise ValueError(f"cannot factor {f}")
    out: list[PrimePower] = []
    n = f
    p = 2
    while p * p <= n and p <= trial_limit:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append(PrimePower(p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        if not is_probable_prime(n):
            raise ValueError(f"cofactor {n} of {f} is composite beyond the trial-division limit")
        out.append(PrimePower(n, 1))
    return out


def divisors(f: int) -> list[int]:
    """All positive divisors of ``f`` in increasing order."""
    fac = factorize(f)
    divs = [1]
    for p, e in fac:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError(f"moebius undefined at {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(f: int) -> int:
    out = f
    for p, _ in factorize(f):
        out = out // p * (p - 1)
    return out


def phi_l(f: int, l: int) -> Fraction:
    """prod over primes p | f of (1 - p^-l).  Not Euler's totient."""
    if f < 1 or l < 1:
        raise ValueError(f"phi_l needs f >= 1 and l >= 1, got f={f}, l={l}")
    out = Fraction(1)
    for p, _ in factorize(f):
        out *= 1 - Fraction(1, p**l)
    return out


def moebius_transform(R: PolyQ, f: int) -> Fraction:
    """
    Sum over divisors d > 1 of f of mu(f/d) R(d), for a polynomial with R(1) = 0.

    Evaluated both by divisor enumeration and through the Euler factors
    sum_l r_l phi_l(f) f^l; the two must agree exactly.
    """
    if f <= 2:
        raise ValueError(f"modulus must exceed 2, got {f}")
    if R(1) != 0:
        raise ValueError(f"polynomial must vanish at 1, R(1) = {R(1)}")
    direct = sum(
        (moebius(f // d) * R(d) for d in divisors(f) if d > 1), Fraction(0)
    )
    via_phi = sum(
        (c * phi_l(f, l) * f**l for l, c in enumerate(R.coeffs) if l and c),
        Fraction(0),
    )
    if direct != via_phi:
        raise AssertionError(f"Moebius transform mismatch at f={f}: {direct} != {via_phi}")
    return direct


def coprime_residues(f: int) -> list[int]:
    """Residues 1 <= k < f with gcd(k, f) = 1."""
    primes = [p for p, _ in factorize(f)]
    return [k for k in range(1, f) if all(k % p for p in primes)]
