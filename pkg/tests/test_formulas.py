import itertools
import math
from fractions import Fraction

import mpmath
import pytest

from lfmean.errors import ArityError, ParityError
from lfmean.exact import bernoulli, zeta_even_rational
from lfmean.formulas import (
    MeanValueFormula,
    c_coefficient,
    check_bernoulli_identity,
    evaluate_exact,
    evaluate_numeric,
    mean_value,
    mean_value_all_ones,
    mean_value_pair,
    mean_value_single,
    partitions_as_multiplicities,
)

F = Fraction


def scaled(prefactor, coeffs):
    return {l: prefactor * c for l, c in coeffs.items()}


class TestMeanValue:
    def test_one_one(self):
        M = mean_value([1, 1])
        assert M.pi_power == 2
        assert M.terms == {2: F(1, 6), 1: F(-1, 2)}

    def test_first_example(self):
        assert mean_value([1, 1, 2]).terms == {4: F(1, 90), 2: F(-1, 18)}

    def test_two_two(self):
        assert mean_value([2, 2]).terms == {4: F(1, 90), 2: F(1, 9)}

    def test_errors(self):
        with pytest.raises(ParityError):
            mean_value([1, 2])
        with pytest.raises(ArityError):
            mean_value([4])

    def test_permutation_invariant(self):
        ref = mean_value([1, 2, 3, 4])
        for perm in itertools.permutations([1, 2, 3, 4]):
            assert mean_value(perm).same_terms(ref)

    @pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 7) for n in range(1, 7)])
    def test_fourth_example_shape(self, m, n):
        M = mean_value([m, n, m + n])
        assert M.terms[M.pi_power] == zeta_even_rational(m + n)
        M.check_invariants()

    def test_evaluations_well_defined(self):
        for m_vec in [(1, 1), (2, 2), (1, 1, 2), (1, 1, 1, 1), (2, 3, 5), (1,) * 6]:
            M = mean_value(m_vec)
            for f in range(3, 101):
                assert isinstance(evaluate_exact(M, f), Fraction)
            if set(m_vec) == {1}:
                assert M.terms[1] == F((-1) ** (len(m_vec) // 2), 2)


class TestClosedForms:
    @pytest.mark.parametrize(
        "m, prefactor, coeffs",
        [
            (3, F(1, 945), {6: 1, 2: -21}),
            (4, F(1, 9450), {8: 1, 4: F(14, 3), 2: F(200, 3)}),
            (5, F(1, 93555), {10: 1, 4: -22, 2: -231}),
        ],
    )
    def test_single_displayed(self, m, prefactor, coeffs):
        assert mean_value_single(m).terms == scaled(prefactor, coeffs)

    @pytest.mark.parametrize("m", range(1, 13))
    def test_single_matches_pipeline(self, m):
        assert mean_value_single(m).same_terms(mean_value([m, m]))

    @pytest.mark.parametrize(
        "m, n",
        [(m, n) for m in range(1, 13) for n in range(1, 13) if (m - n) % 2 == 0 and (m, n) != (1, 1)],
    )
    def test_pair_matches_pipeline(self, m, n):
        assert mean_value_pair(m, n) == mean_value([m, n])

    def test_pair_diagonal_is_single(self):
        for m in range(2, 10):
            assert mean_value_pair(m, m) == mean_value_single(m)

    def test_pair_errors(self):
        with pytest.raises(ParityError):
            mean_value_pair(1, 2)
        with pytest.raises(ValueError):
            mean_value_pair(1, 1)

    def test_all_ones_displayed(self):
        assert mean_value_all_ones(2).same_terms(mean_value_single(1))
        assert mean_value_all_ones(4).terms == scaled(F(1, 90), {4: 1, 2: -20, 1: 45})
        M6 = mean_value_all_ones(6)
        assert M6.pi_power == 6
        assert M6.terms == scaled(F(1, 945), {6: 1, 4: -21, 2: F(483, 2), 1: F(-945, 2)})

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_all_ones_matches_pipeline(self, n):
        assert mean_value_all_ones(n) == mean_value([1] * n)

    def test_all_ones_rejects_odd(self):
        with pytest.raises(ParityError):
            mean_value_all_ones(3)


def partition_count(N):
    return sum(1 for _ in partitions_as_multiplicities(N))


def test_partitions():
    assert [partition_count(N) for N in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    for N in range(1, 8):
        for e in partitions_as_multiplicities(N):
            assert sum(l * el for l, el in enumerate(e, 1)) == N


def c_by_tuples(n, N):
    Fk = lambda k: bernoulli(2 * k) / math.factorial(2 * k)
    return sum(
        (math.prod(Fk(k) for k in ks) for ks in itertools.product(range(N + 1), repeat=n) if sum(ks) == N),
        F(0),
    )


@pytest.mark.parametrize("n, N", [(n, N) for n in range(1, 7) for N in range(1, 5) if N <= n])
def test_c_coefficient_matches_tuple_enumeration(n, N):
    assert c_coefficient(n, N) == c_by_tuples(n, N)


def test_c_coefficient_first_order():
    for n in range(1, 10):
        assert c_coefficient(n, 1) == F(n, 12)
    with pytest.raises(ValueError):
        c_coefficient(2, 3)
    with pytest.raises(ValueError):
        c_coefficient(2, 0)


class TestEvaluation:
    def test_exact_values(self):
        assert evaluate_exact(mean_value([1, 1]), 4) == F(1, 16)
        assert evaluate_exact(mean_value([2, 2]), 3) == F(16, 729)
        for n in (2, 4, 6, 8):
            assert evaluate_exact(mean_value([1] * n), 3) == F(1, 3 ** (3 * n // 2))

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            evaluate_exact(mean_value([1, 1]), 2)

    def test_numeric(self):
        v = evaluate_numeric(mean_value([1, 1]), 4, 256)
        with mpmath.workprec(256):
            assert abs(v - mpmath.pi**2 / 16) <= mpmath.ldexp(1, -250)

    def test_numeric_empty_terms(self):
        assert evaluate_numeric(MeanValueFormula((1, 1), 2, {}), 5, 128) == 0

    def test_precision_agreement(self):
        a = evaluate_numeric(mean_value([2, 3, 5]), 7, 128)
        b = evaluate_numeric(mean_value([2, 3, 5]), 7, 256)
        with mpmath.workprec(256):
            assert abs(a - b) <= mpmath.mpf(10) ** -30


class TestSerialization:
    @pytest.mark.parametrize("m_vec", [(1, 1), (1, 1, 2), (3, 3), (1,) * 6, (7, 9)])
    def test_round_trip(self, m_vec):
        M = mean_value(m_vec)
        assert MeanValueFormula.from_json(M.to_json()) == M

    def test_document_shape(self):
        doc = mean_value([1, 1]).to_dict()
        assert doc == {
            "m_vec": [1, 1],
            "pi_power": 2,
            "terms": [{"l": 2, "num": "1", "den": "6"}, {"l": 1, "num": "-1", "den": "2"}],
        }

    def test_render(self):
        assert mean_value([1, 1, 2]).render() == "pi^4/90 * ( phi_4(f) - 5*phi_2(f)/f^2 )"
        assert mean_value_single(4).render() == (
            "pi^8/9450 * ( phi_8(f) + 14/3*phi_4(f)/f^4 + 200/3*phi_2(f)/f^6 )"
        )


class TestBernoulliIdentity:
    def test_one_one(self):
        r = check_bernoulli_identity(1, 1)
        assert r.rhs == F(1, 12)
        assert r.corrected_sign_matches and not r.paper_sign_matches

    def test_two_two(self):
        r = check_bernoulli_identity(2, 2)
        assert r.rhs == F(1, 180)
        assert r.corrected_sign_matches and not r.paper_sign_matches

    def test_corrected_sign_through_weight_60(self):
        for w in range(2, 61, 2):
            for m in range(1, w):
                assert check_bernoulli_identity(m, w - m).corrected_sign_matches

    def test_parity_mismatch(self):
        with pytest.raises(ParityError):
            check_bernoulli_identity(1, 2)
