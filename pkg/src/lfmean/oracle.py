"""
Numerical ground truth straight from the definitions.

Characters mod f are built on an explicit CRT decomposition of the unit
group, L(m, chi) comes from the finite cotangent-derivative sum, and mean
values are formed either by the literal nested character sum or by the
single sum left over after orthogonality.  Nothing here touches the
residue polynomials of the exact side.

All functions take ``precision_bits`` and compute with a few guard bits on
top; results are rounded back to the requested precision.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from .arith import coprime_residues, euler_phi, factorize
from .errors import BudgetExceeded, ParityError
from .series import PolyQ, validate_m_vec

__all__ = [
    "GUARD_BITS",
    "DEFAULT_BUDGET",
    "UnitGroupStructure",
    "DirichletCharacter",
    "unit_group",
    "characters",
    "character_value",
    "q_polynomial",
    "cot_derivative",
    "l_value",
    "s_direct",
    "brute_force_mean",
    "collapsed_mean",
    "orthogonality_sum",
]

GUARD_BITS = 32
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/fZ)* as a product of cyclic groups with fixed generators."""

    modulus: int
    components: tuple[tuple[int, int], ...]
    dlog_table: dict[int, tuple[int, ...]]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(order for _, order in self.components)

    def dlog(self, k: int) -> tuple[int, ...] | None:
        return self.dlog_table.get(k % self.modulus)


def _primitive_root(p: int, e: int) -> int:
    pe = p**e
    phi = pe // p * (p - 1)
    prime_factors = [q for q, _ in factorize(phi)]
    for g in itertools.count(2):
        if g % p == 0:
            continue
        if all(pow(g, phi // q, pe) != 1 for q in prime_factors):
            return g
    raise AssertionError("unreachable")


def _crt_lift(local: int, pe: int, f: int) -> int:
    # x = local mod pe, x = 1 mod f/pe
    rest = f // pe
    return (local * rest * pow(rest, -1, pe) + pe * pow(pe, -1, rest)) % f if rest > 1 else local % f


@lru_cache(maxsize=None)
def unit_group(f: int) -> UnitGroupStructure:
    if f <= 2:
        raise ValueError(f"modulus must exceed 2, got {f}")
    components: list[tuple[int, int]] = []
    for p, e in factorize(f):
        pe = p**e
        if p == 2:
            if e == 2:
                components.append((_crt_lift(3, pe, f), 2))
            elif e >= 3:
                components.append((_crt_lift(-1, pe, f), 2))
                components.append((_crt_lift(5, pe, f), 2 ** (e - 2)))
        else:
            g = _primitive_root(p, e)
            components.append((_crt_lift(g, pe, f), pe // p * (p - 1)))
    table: dict[int, tuple[int, ...]] = {}
    for vec in itertools.product(*(range(o) for _, o in components)):
        k = 1
        for (g, _), x in zip(components, vec):
            k = k * pow(g, x, f) % f
        if k in table:
            raise AssertionError(f"generators of (Z/{f}Z)* are not independent")
        table[k] = vec
    if len(table) != euler_phi(f):
        raise AssertionError(f"decomposition of (Z/{f}Z)* misses residues")
    return UnitGroupStructure(f, tuple(components), table)


@dataclass(frozen=True)
class DirichletCharacter:
    structure: UnitGroupStructure
    exponents: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.structure.modulus

    def angle(self, k: int) -> Fraction | None:
        """chi(k) = exp(2 pi i * angle), or None when gcd(k, f) > 1."""
        vec = self.structure.dlog(k)
        if vec is None:
            return None
        total = sum(
            (Fraction(t * x, order) for t, x, order in zip(self.exponents, vec, self.structure.orders)),
            Fraction(0),
        )
        return total - math.floor(total)

    @property
    def parity(self) -> int:
        return 1 if self.angle(-1) == 0 else -1

    def is_principal(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        if other.structure is not self.structure:
            raise ValueError("characters belong to different moduli")
        exps = tuple(
            (a + b) % o for a, b, o in zip(self.exponents, other.exponents, self.structure.orders)
        )
        return DirichletCharacter(self.structure, exps)


def characters(f: int, parity: int) -> list[DirichletCharacter]:
    """All characters mod f with chi(-1) = parity."""
    if parity not in (1, -1):
        raise ValueError(f"parity must be +1 or -1, got {parity}")
    G = unit_group(f)
    chars = (
        DirichletCharacter(G, exps)
        for exps in itertools.product(*(range(o) for o in G.orders))
    )
    return [chi for chi in chars if chi.parity == parity]


def _unit_root(angle: Fraction):
    # exact at angles that are multiples of 1/4
    return mpmath.mpc(mpmath.cospi(2 * angle.numerator / mpmath.mpf(angle.denominator)),
                      mpmath.sinpi(2 * angle.numerator / mpmath.mpf(angle.denominator)))


def character_value(chi: DirichletCharacter, k: int, precision_bits: int = 256):
    angle = chi.angle(k)
    if angle is None:
        return mpmath.mpc(0)
    with mpmath.workprec(precision_bits + GUARD_BITS):
        z = _unit_root(angle)
    with mpmath.workprec(precision_bits):
        return +z


@lru_cache(maxsize=None)
def q_polynomial(k: int) -> PolyQ:
    """Q_k with cot^(k-1) = Q_k(cot)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    q = PolyQ.x()
    minus_x2_plus_1 = PolyQ((-1, 0, -1))
    for _ in range(k - 1):
        q = minus_x2_plus_1 * q.derivative()
    return q


def cot_derivative(order: int, theta, precision_bits: int = 256):
    """The ``order``-th derivative of cot at ``theta``."""
    if order < 0:
        raise ValueError(f"derivative order must be non-negative, got {order}")
    with mpmath.workprec(precision_bits + GUARD_BITS):
        theta = mpmath.mpf(theta)
        s = mpmath.sin(theta)
        if s == 0 or abs(s) < mpmath.ldexp(1, -(precision_bits - 8)):
            raise ValueError(f"cot has a pole at theta = {mpmath.nstr(theta, 15)}")
        value = q_polynomial(order + 1)(mpmath.cos(theta) / s)
    with mpmath.workprec(precision_bits):
        return +value


def _cot_derivative_at(order: int, k: int, d: int):
    # cot^(order)(pi k / d) at the ambient precision, exact angle reduction
    c = mpmath.cospi(mpmath.mpf(k) / d) / mpmath.sinpi(mpmath.mpf(k) / d)
    return q_polynomial(order + 1)(c)


def _l_prefactor(m: int, f: int):
    return (-1) ** (m - 1) * mpmath.pi**m / (2 * mpmath.mpf(f) ** m * math.factorial(m - 1))


def _l_value_raw(m: int, chi: DirichletCharacter):
    f = chi.modulus
    total = mpmath.mpc(0)
    for k in coprime_residues(f):
        total += _unit_root(chi.angle(k)) * _cot_derivative_at(m - 1, k, f)
    return _l_prefactor(m, f) * total


def l_value(m: int, chi: DirichletCharacter, precision_bits: int = 256):
    """L(m, chi) via the finite cotangent sum; requires chi(-1) = (-1)^m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if chi.parity != (-1) ** m:
        raise ParityError(f"character parity {chi.parity} does not match m = {m}")
    with mpmath.workprec(precision_bits + GUARD_BITS):
        value = _l_value_raw(m, chi)
    with mpmath.workprec(precision_bits):
        return +value


def s_direct(m_vec: Sequence[int], d: int, precision_bits: int = 256):
    """sum_{k=1}^{d-1} prod_l cot^(m_l - 1)(k pi / d), summed numerically."""
    if d <= 1:
        raise ValueError(f"d must exceed 1, got {d}")
    m_vec = tuple(m_vec)
    with mpmath.workprec(precision_bits + GUARD_BITS):
        total = mpmath.mpf(0)
        for k in range(1, d):
            prod = mpmath.mpf(1)
            for m in m_vec:
                prod *= _cot_derivative_at(m - 1, k, d)
            total += prod
    with mpmath.workprec(precision_bits):
        return +total


def collapsed_mean(m_vec: Sequence[int], f: int, precision_bits: int = 256):
    """Mean value after orthogonality: one sum over units k mod f."""
    m_vec = validate_m_vec(m_vec)
    if f <= 2:
        raise ValueError(f"modulus must exceed 2, got {f}")
    n, P = len(m_vec), sum(m_vec)
    with mpmath.workprec(precision_bits + GUARD_BITS):
        total = mpmath.mpf(0)
        for k in coprime_residues(f):
            prod = mpmath.mpf(1)
            for m in m_vec:
                prod *= _cot_derivative_at(m - 1, k, f)
            total += prod
        fact = 1
        for m in m_vec:
            fact *= math.factorial(m - 1)
        value = (-1) ** n * mpmath.pi**P / (2 * mpmath.mpf(f) ** P * fact) * total
    with mpmath.workprec(precision_bits):
        return +value


def brute_force_mean(
    m_vec: Sequence[int],
    f: int,
    precision_bits: int = 256,
    budget: int = DEFAULT_BUDGET,
):
    """
    Literal nested character average of L(m_1, chi_1) ... conj(L(m_n, chi_1...chi_(n-1))).

    Refuses when phi(f)^(n-1) exceeds ``budget``.  Returns the complex sum;
    its imaginary part should vanish to working precision.
    """
    m_vec = validate_m_vec(m_vec)
    if f <= 2:
        raise ValueError(f"modulus must exceed 2, got {f}")
    n = len(m_vec)
    phi = euler_phi(f)
    if phi ** (n - 1) > budget:
        raise BudgetExceeded(f"phi({f})^{n - 1} = {phi ** (n - 1)} exceeds budget {budget}")
    with mpmath.workprec(precision_bits + GUARD_BITS):
        # L-values for every character of each needed parity, keyed by exponents
        cache: dict[tuple[int, tuple[int, ...]], object] = {}

        def lv(m: int, chi: DirichletCharacter):
            key = (m, chi.exponents)
            if key not in cache:
                cache[key] = _l_value_raw(m, chi)
            return cache[key]

        classes = [characters(f, (-1) ** m) for m in m_vec[:-1]]
        last = m_vec[-1]
        total = mpmath.mpc(0)
        for combo in itertools.product(*classes):
            prod = mpmath.mpc(1)
            chi_prod = combo[0]
            for m, chi in zip(m_vec, combo):
                prod *= lv(m, chi)
            for chi in combo[1:]:
                chi_prod = chi_prod * chi
            prod *= mpmath.conj(lv(last, chi_prod))
            total += prod
        value = (mpmath.mpf(2) / phi) ** (n - 1) * total
    with mpmath.workprec(precision_bits):
        return +value


def orthogonality_sum(f: int, parity: int, k: int, k2: int, precision_bits: int = 256):
    """(2/phi(f)) * sum over characters of the given parity of chi(k) conj(chi(k2))."""
    chars = characters(f, parity)
    with mpmath.workprec(precision_bits + GUARD_BITS):
        total = mpmath.mpc(0)
        for chi in chars:
            a, b = chi.angle(k), chi.angle(k2)
            if a is None or b is None:
                continue
            total += _unit_root((a - b) % 1)
        value = 2 * total / euler_phi(f)
    with mpmath.workprec(precision_bits):
        return +value
