"""Modular arithmetic over Z_d: primality, inverses, Legendre symbols, Gauss sums.

All moduli used by the package are small (d <= 43 in practice), so everything
here is plain integer arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from .errors import NotInvertible, NotOddPrime, ZeroParameter

ResidueClass = Literal["1 mod 4", "3 mod 4", "not-an-odd-prime"]


@dataclass(frozen=True)
class PrimeModulus:
    d: int
    residue_class: ResidueClass

    @property
    def is_odd_prime(self) -> bool:
        return self.residue_class != "not-an-odd-prime"

    @property
    def k(self) -> int:
        """The k in d = 4k + 1 or d = 4k + 3."""
        return self.d // 4


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def classify_modulus(d: int) -> PrimeModulus:
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    if d == 2 or not is_prime(d):
        return PrimeModulus(d, "not-an-odd-prime")
    return PrimeModulus(d, "1 mod 4" if d % 4 == 1 else "3 mod 4")


def require_odd_prime(d: int) -> PrimeModulus:
    pm = classify_modulus(d)
    if not pm.is_odd_prime:
        raise NotOddPrime(f"d = {d} is not an odd prime")
    return pm


def mod_inverse(a: int, d: int) -> int:
    a %= d
    if math.gcd(a, d) != 1:
        raise NotInvertible(f"{a} has no inverse modulo {d}")
    return pow(a, -1, d)


def legendre_symbol(a: int, d: int) -> int:
    """Legendre symbol (a/d) by Euler's criterion."""
    a %= d
    if a == 0:
        return 0
    return 1 if pow(a, (d - 1) // 2, d) == 1 else -1


def quadratic_residues(d: int) -> set[int]:
    return {(r * r) % d for r in range(1, d)}


def tau(d: int) -> complex:
    """The phase -exp(i pi / d) = exp(i pi (d+1)/d) used by the displacement operators."""
    return cmath.exp(1j * math.pi * (d + 1) / d)


def tau_power(e: int, d: int) -> complex:
    """tau**e for odd d, reduced exactly through tau = omega**((d+1)/2)."""
    half = (d + 1) // 2
    return cmath.exp(2j * math.pi * ((e * half) % d) / d)


def quadratic_gauss_sum(a: int, d: int) -> complex:
    """Direct sum over r of tau**(a r^2).

    For d = 3 (mod 4) prime the result is +-i sqrt(d). The sign is not fixed
    by the Legendre symbol of ``a`` alone under this choice of tau, so callers
    should rely only on the square, which is always -d.
    """
    require_odd_prime(d)
    if a % d == 0:
        raise ZeroParameter("Gauss sum parameter must be nonzero mod d")
    return sum(tau_power(a * r * r, d) for r in range(d))
