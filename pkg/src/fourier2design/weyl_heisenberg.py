"""Weyl-Heisenberg displacement operators, the Fourier matrix and Clifford
representatives of the Fourier-commuting subgroup FSL(2, Z_d).

Conventions (odd d)::

    U e_r = omega^r e_r,   V e_r = e_{r+1},   omega = exp(2 pi i / d)
    tau = -exp(i pi / d)
    W(r, s) = tau^(r s) V^r U^s

All global phases of Clifford representatives are fixed to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import number_theory as nt
from .errors import (BetaZero, EvenDimension, IdentityElement, NotInDomain,
                     WrongDimensionClass)


class WeylIndex(NamedTuple):
    r: int
    s: int
    d: int

    @classmethod
    def make(cls, r: int, s: int, d: int) -> "WeylIndex":
        return cls(r % d, s % d, d)


@dataclass(frozen=True)
class SL2Element:
    alpha: int
    beta: int
    gamma: int
    delta: int
    d: int

    def __post_init__(self):
        d = self.d
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, getattr(self, name) % d)
        if (self.alpha * self.delta - self.beta * self.gamma) % d != 1:
            raise ValueError(f"determinant of {self.matrix().tolist()} is not 1 mod {d}")

    def matrix(self) -> np.ndarray:
        return np.array([[self.alpha, self.beta], [self.gamma, self.delta]])

    def __mul__(self, other: "SL2Element") -> "SL2Element":
        m = (self.matrix() @ other.matrix()) % self.d
        return SL2Element(int(m[0, 0]), int(m[0, 1]), int(m[1, 0]), int(m[1, 1]), self.d)

    def act(self, r: int, s: int) -> tuple[int, int]:
        """(r, s) -> G (r, s)^T mod d."""
        d = self.d
        return (self.alpha * r + self.beta * s) % d, (self.gamma * r + self.delta * s) % d


@dataclass(frozen=True)
class FSLElement:
    """[[alpha, beta], [-beta, alpha]] with alpha^2 + beta^2 = 1 mod d."""
    alpha: int
    beta: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", self.alpha % self.d)
        object.__setattr__(self, "beta", self.beta % self.d)
        if (self.alpha ** 2 + self.beta ** 2) % self.d != 1:
            raise ValueError(f"alpha^2 + beta^2 != 1 mod {self.d} for ({self.alpha}, {self.beta})")

    @property
    def base(self) -> SL2Element:
        return SL2Element(self.alpha, self.beta, -self.beta, self.alpha, self.d)

    @property
    def is_identity(self) -> bool:
        return self.alpha == 1 and self.beta == 0

    def __mul__(self, other: "FSLElement") -> "FSLElement":
        a1, b1, a2, b2 = self.alpha, self.beta, other.alpha, other.beta
        return FSLElement(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self.d)

    def order(self) -> int:
        g, n = self, 1
        while not g.is_identity:
            g = g * self
            n += 1
        return n


def _require_odd(d: int) -> None:
    if d % 2 == 0:
        raise EvenDimension(f"the Weyl-Heisenberg group object needs odd d, got {d}")
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")


def _require_3mod4(d: int) -> None:
    if nt.classify_modulus(d).residue_class != "3 mod 4":
        raise WrongDimensionClass(f"d = {d} is not a prime with d = 3 (mod 4)")


def tau(d: int) -> complex:
    _require_odd(d)
    return nt.tau(d)


def clock(d: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def shift(d: int) -> np.ndarray:
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def parity(d: int) -> np.ndarray:
    """e_r -> e_{-r}."""
    p = np.zeros((d, d), dtype=complex)
    for r in range(d):
        p[(-r) % d, r] = 1.0
    return p


def displacement(r: int, s: int, d: int) -> np.ndarray:
    """V^r U^s without the tau^(rs) phase; defined for every d >= 2."""
    phases = np.exp(2j * np.pi * s * np.arange(d) / d)
    return np.roll(np.diag(phases), r % d, axis=0)


def wh(r: int, s: int, d: int) -> np.ndarray:
    _require_odd(d)
    return nt.tau_power(r * s, d) * displacement(r, s, d)


@lru_cache(maxsize=32)
def _wh_stack(d: int) -> np.ndarray:
    out = np.empty((d, d, d, d), dtype=complex)
    for r in range(d):
        for s in range(d):
            out[r, s] = wh(r, s, d)
    out.setflags(write=False)
    return out


def wh_all(d: int) -> np.ndarray:
    """Array of shape (d, d, d, d) with ``wh_all(d)[r, s] == wh(r, s, d)``."""
    return _wh_stack(d)


def fourier(d: int) -> np.ndarray:
    r = np.arange(d)
    return np.exp(2j * np.pi * np.outer(r, r) / d) / np.sqrt(d)


def fsl_elements(d: int) -> list[FSLElement]:
    nt.require_odd_prime(d)
    return [FSLElement(a, b, d) for a in range(d) for b in range(d)
            if (a * a + b * b) % d == 1]


def fsl_generator(d: int) -> FSLElement:
    """Smallest (lexicographic) element generating the cyclic group FSL(2, Z_d)."""
    elems = fsl_elements(d)
    for g in elems:
        if g.order() == len(elems):
            return g
    raise AssertionError(f"FSL(2, Z_{d}) has no generator")  # cyclic for odd primes


FOURIER_FSL = (0, -1)
"""(alpha, beta) of the FSL element represented by the Fourier matrix itself."""


def clifford_rep_appleby(g: FSLElement) -> np.ndarray:
    """(1/sqrt d) sum_{r,s} tau^((alpha r^2 - 2 r s + alpha s^2) / beta) |e_r><e_s|."""
    d = g.d
    nt.require_odd_prime(d)
    if g.beta == 0:
        raise BetaZero("representative for beta = 0 is I or the parity matrix")
    binv = nt.mod_inverse(g.beta, d)
    r = np.arange(d)[:, None]
    s = np.arange(d)[None, :]
    e = (binv * (g.alpha * r * r - 2 * r * s + g.alpha * s * s)) % d
    half = (d + 1) // 2
    return np.exp(2j * np.pi * ((e * half) % d) / d) / np.sqrt(d)


def clifford_rep_wh_expansion(g: FSLElement) -> np.ndarray:
    """(1/d) sum_{r,s} tau^(beta / (2 (1 - alpha)) (r^2 + s^2)) W(r, s)."""
    d = g.d
    nt.require_odd_prime(d)
    if g.alpha == 1:
        raise IdentityElement("expansion is undefined at the identity")
    m = (g.beta * nt.mod_inverse(2 * (1 - g.alpha), d)) % d
    return _quadratic_wh_sum(m, d)


def clifford_rep(g: FSLElement) -> np.ndarray:
    """Representative of any FSL element, using I and parity for beta = 0."""
    if g.beta == 0:
        return np.eye(g.d, dtype=complex) if g.alpha == 1 else parity(g.d)
    return clifford_rep_appleby(g)


def _quadratic_wh_sum(m: int, d: int) -> np.ndarray:
    r = np.arange(d)
    q = (r[:, None] ** 2 + r[None, :] ** 2) * m
    half = (d + 1) // 2
    coeff = np.exp(2j * np.pi * ((q * half) % d) / d)
    return np.einsum("rs,rsab->ab", coeff, wh_all(d)) / d


def r_matrix(d: int, m: int) -> np.ndarray:
    _require_3mod4(d)
    return _quadratic_wh_sum(m % d, d)


def r_family(d: int) -> list[np.ndarray]:
    return [r_matrix(d, m) for m in range(d)]


def m_to_group(m: int, d: int) -> FSLElement:
    """alpha = (4m^2 - 1)/(4m^2 + 1), beta = 4m/(4m^2 + 1) mod d."""
    _require_3mod4(d)
    den = nt.mod_inverse(4 * m * m + 1, d)
    return FSLElement((4 * m * m - 1) * den, 4 * m * den, d)


def group_to_m(g: FSLElement, d: int) -> int:
    """m = beta / (2 (1 - alpha)) mod d."""
    _require_3mod4(d)
    if g.d != d:
        raise NotInDomain(f"element lives over Z_{g.d}, not Z_{d}")
    if g.alpha == 1:
        raise NotInDomain("the identity has no R_m label")
    return (g.beta * nt.mod_inverse(2 * (1 - g.alpha), d)) % d


def align_phase(m: np.ndarray) -> np.ndarray:
    """Scale by the unit scalar that makes the largest-modulus entry real positive."""
    flat = m.ravel()
    k = int(np.argmax(np.abs(flat)))
    v = flat[k]
    if abs(v) == 0:
        return m.copy()
    return m * (abs(v) / v)


def phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max entrywise difference of ``a`` and ``b`` after phase alignment.

    Both matrices are normalised to unit Frobenius norm first, so the result is
    independent of positive scale.
    """
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    # align b to a by the overlap phase; robust when several entries tie in modulus
    ov = np.vdot(b, a)
    if abs(ov) < 1e-300:
        return float(np.max(np.abs(a - b)))
    return float(np.max(np.abs(a - b * (ov / abs(ov)))))
