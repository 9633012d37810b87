import cmath
import math

import pytest
from hypothesis import given, strategies as st

from fourier2design import number_theory as nt
from fourier2design.errors import NotInvertible, NotOddPrime, ZeroParameter

PRIMES_3MOD4 = [p for p in range(3, 44) if nt.is_prime(p) and p % 4 == 3]
ODD_PRIMES = [p for p in range(3, 44) if nt.is_prime(p)]


@pytest.mark.parametrize("d, cls", [(3, "3 mod 4"), (7, "3 mod 4"), (9, "not-an-odd-prime"),
                                    (5, "1 mod 4"), (2, "not-an-odd-prime"), (1 + 42, "3 mod 4")])
def test_classify_modulus(d, cls):
    pm = nt.classify_modulus(d)
    assert pm.residue_class == cls
    assert pm.d == d


def test_classify_rejects_small():
    with pytest.raises(ValueError):
        nt.classify_modulus(1)


def test_mod_inverse_examples():
    assert nt.mod_inverse(2, 7) == 4
    assert nt.mod_inverse(1, 11) == 1
    assert nt.mod_inverse(-1, 7) == 6
    with pytest.raises(NotInvertible):
        nt.mod_inverse(3, 9)


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 10_000))
def test_mod_inverse_involution(d, a):
    if a % d == 0:
        return
    inv = nt.mod_inverse(a, d)
    assert (a * inv) % d == 1
    assert nt.mod_inverse(inv, d) == a % d


def test_legendre_examples():
    assert nt.legendre_symbol(1, 7) == 1
    assert nt.legendre_symbol(3, 7) == -1
    assert nt.legendre_symbol(0, 11) == 0


@pytest.mark.parametrize("d", ODD_PRIMES)
def test_legendre_matches_residue_enumeration(d):
    squares = nt.quadratic_residues(d)
    for a in range(1, d):
        assert nt.legendre_symbol(a, d) == (1 if a in squares else -1)


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 42), st.integers(1, 42))
def test_legendre_multiplicative(d, a, b):
    a, b = a % d or 1, b % d or 1
    assert nt.legendre_symbol(a * b, d) == nt.legendre_symbol(a, d) * nt.legendre_symbol(b, d)


def test_gauss_sum_d3_direct():
    # 1 + 2 exp(4 pi i / 3)
    expected = 1 + 2 * cmath.exp(4j * math.pi / 3)
    got = nt.quadratic_gauss_sum(1, 3)
    assert abs(got - expected) < 1e-14
    assert abs(got - (-1j * math.sqrt(3))) < 1e-14


def test_gauss_sum_zero_parameter():
    with pytest.raises(ZeroParameter):
        nt.quadratic_gauss_sum(7, 7)


def test_gauss_sum_not_prime():
    with pytest.raises(NotOddPrime):
        nt.quadratic_gauss_sum(1, 9)


def test_gauss_sum_d7_purely_imaginary():
    g = nt.quadratic_gauss_sum(2, 7)
    assert abs(abs(g) - math.sqrt(7)) < 1e-12
    assert abs(g.real) < 1e-12


@pytest.mark.parametrize("d", PRIMES_3MOD4)
def test_gauss_sum_squares_to_minus_d(d):
    for a in range(1, d):
        g = nt.quadratic_gauss_sum(a, d)
        assert abs(g * g + d) < 1e-10
        # closed form up to the sign convention
        assert abs(abs(g) - math.sqrt(d)) < 1e-12


@pytest.mark.parametrize("d", PRIMES_3MOD4)
def test_gauss_sum_sign_follows_legendre_of_rescaled_parameter(d):
    # tau = omega^((d+1)/2), so the sum is the omega-Gauss sum at a (d+1)/2
    for a in range(1, d):
        g = nt.quadratic_gauss_sum(a, d)
        sign = nt.legendre_symbol(a * (d + 1) // 2, d)
        assert abs(g - sign * 1j * math.sqrt(d)) < 1e-10


def test_tau_power_matches_direct_power():
    for d in (3, 5, 7, 11):
        t = nt.tau(d)
        for e in range(-2 * d, 2 * d):
            assert abs(nt.tau_power(e, d) - t ** e) < 1e-12
