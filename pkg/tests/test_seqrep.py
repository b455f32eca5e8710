"""Canonical form, ring arithmetic and sign-spectrum behaviour of the carrier."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import gens
from seqrings.oracle import conclusive_sample_size, empirical_spectrum, eval_at
from seqrings.seqrep import (
    PeriodicCoeff,
    SeqRep,
    Sign,
    Term,
    alternating,
    constant,
    eventually_zero,
    normalize,
    nth_power,
    one,
    periodic_seq,
    sign_spectrum,
    zero,
)


def one_minus_alt() -> SeqRep:
    return constant(1) - alternating()


def one_plus_alt() -> SeqRep:
    return constant(1) + alternating()


class TestNormalize:
    def test_additive_inverse_cancels(self):
        raw = [Term(PeriodicCoeff.of(1), Fraction(0)), Term(PeriodicCoeff.of(-1), Fraction(0))]
        assert normalize(raw) == zero()

    def test_pointwise_cancellation_of_patterns(self):
        raw = [
            Term(PeriodicCoeff.of(1, -1), Fraction(0)),
            Term(PeriodicCoeff.of(-1, 1), Fraction(0)),
        ]
        assert normalize(raw) == zero()

    def test_pattern_reduced_to_minimal_period(self):
        assert PeriodicCoeff.of(1, 1).period == 1
        assert normalize([Term(PeriodicCoeff.of(1, 1), Fraction(1))]) == nth_power(-1)

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(200):
            x = gens.rand_seqrep(rng)
            assert normalize(x.terms) == x

    def test_rejects_decreasing_exponents(self):
        t0 = Term(PeriodicCoeff.of(1), Fraction(1))
        t1 = Term(PeriodicCoeff.of(1), Fraction(0))
        with pytest.raises(ValueError):
            SeqRep((t0, t1))


class TestArithmetic:
    def test_zero_divisor_product_is_exactly_zero(self):
        assert one_minus_alt() * one_plus_alt() == zero()

    def test_square_of_reciprocal(self):
        assert nth_power(-1) ** 2 == nth_power(-2)

    def test_additive_identity(self):
        rng = random.Random(11)
        for _ in range(50):
            x = gens.rand_seqrep(rng)
            assert x + zero() == x

    def test_scalar_multiples(self):
        assert 2 * nth_power(-1) == nth_power(-1) + nth_power(-1)
        assert nth_power(-1).scale(0) == zero()

    def test_pow_rejects_negative(self):
        with pytest.raises(ValueError):
            one() ** (-1)


@given(gens.seq_reps(), gens.seq_reps(), gens.seq_reps())
def test_ring_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == zero()
    assert x * one() == x


@given(gens.seq_reps(max_terms=2), st.integers(0, 4))
def test_pow_is_iterated_mul(x, k):
    expected = one()
    for _ in range(k):
        expected = expected * x
    assert x**k == expected


@given(gens.integer_exp_reps(), gens.integer_exp_reps(), st.integers(1, 10**4))
def test_denotation_soundness(x, y, n):
    vx, vy = eval_at(x, n).value, eval_at(y, n).value
    assert eval_at(x + y, n).value == vx + vy
    assert eval_at(x - y, n).value == vx - vy
    assert eval_at(x * y, n).value == vx * vy
    assert eval_at(-x, n).value == -vx
    assert eval_at(x.scale(Fraction(3, 2)), n).value == Fraction(3, 2) * vx


class TestSignSpectrum:
    def test_oscillating_witness(self):
        spec = sign_spectrum(one_minus_alt())
        assert spec.modulus == 2
        assert spec.signs == (Sign.ZERO, Sign.POS)  # even n, odd n

    def test_zero(self):
        spec = sign_spectrum(zero())
        assert spec.modulus == 1
        assert spec.signs == (Sign.ZERO,)

    def test_dominant_term_wins(self):
        # frozen from the numeric oracle: 1/n - 1/n^2 > 0 for sampled n >= 2
        x = nth_power(-1) - nth_power(-2)
        assert all(eval_at(x, n).value > 0 for n in range(2, 10**4))
        assert all(eval_at(x, n).value > 0 for n in (10**4, 10**5, 10**6))
        assert sign_spectrum(x).signs == (Sign.POS,)

    def test_modulus_is_lcm_of_periods(self):
        x = periodic_seq(1, 2) + periodic_seq(1, 2, 3) * nth_power(-1)
        assert sign_spectrum(x).modulus == 6


def test_spectrum_matches_numeric_tail_sampling():
    rng = random.Random(23)
    for _ in range(150):
        x = gens.rand_seqrep(rng, denoms=(1, 2))
        n = conclusive_sample_size(x)
        assert empirical_spectrum(x, n) == sign_spectrum(x)


class TestEventuallyZero:
    def test_zero_pattern(self):
        assert eventually_zero(periodic_seq(0, 0))

    def test_oscillating_factor_is_nonzero(self):
        assert not eventually_zero(one_minus_alt())

    def test_zero_divisor_product(self):
        assert eventually_zero(one_minus_alt() * one_plus_alt())
