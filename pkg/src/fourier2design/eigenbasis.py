"""The joint eigenbasis of the commuting family R_m for primes d = 3 (mod 4),
and its expansion in the Weyl-Heisenberg operator basis."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import weyl_heisenberg as whm
from .errors import DegenerateCombination
from .linalg import dagger, hermitian_eig
from .rng import XorShift64Star

EIGENBASIS_SEED = 0x5EED
F_EIGENVALUES = (1, -1, 1j, -1j)  # canonical ordering of the Fourier spectrum


def fourier_multiplicities(d: int) -> dict[complex, int]:
    """Multiplicities of +1, -1, +i, -i as eigenvalues of the d x d Fourier matrix."""
    if d < 2:
        raise ValueError("d must be >= 2")
    k, rem = divmod(d, 4)
    table = {
        0: (k + 1, k, k, k - 1),
        1: (k + 1, k, k, k),
        2: (k + 1, k + 1, k, k),
        3: (k + 1, k + 1, k + 1, k),
    }[rem]
    return dict(zip(F_EIGENVALUES, table))


def nearest_fourier_eigenvalue(z: complex) -> complex:
    return min(F_EIGENVALUES, key=lambda lam: abs(z - lam))


def fix_phase(v: np.ndarray, tie_tol: float = 1e-12) -> np.ndarray:
    """Rotate ``v`` so its largest-modulus entry (lowest index on ties) is real positive."""
    mags = np.abs(v)
    k = int(np.flatnonzero(mags >= mags.max() - tie_tol)[0])
    return v * (mags[k] / v[k])


@dataclass(frozen=True)
class FourierEigenbasis:
    d: int
    vectors: np.ndarray        # shape (d, d); vectors[i] is the i-th basis vector
    f_eigenvalues: np.ndarray  # shape (d,)
    r_eigenvalues: np.ndarray  # shape (d, d); [i, m] is the eigenvalue of R_m on vectors[i]

    def projectors(self) -> np.ndarray:
        return np.einsum("ia,ib->iab", self.vectors, self.vectors.conj())


def _sort_key(f_eig: complex, r_eigs: np.ndarray) -> tuple:
    fi = F_EIGENVALUES.index(nearest_fourier_eigenvalue(f_eig))
    # rounded so that noise cannot reorder equal angles
    angles = tuple(round(float(np.angle(z)) % (2 * math.pi), 8) for z in r_eigs[1:])
    return (fi,) + angles


def common_eigenbasis(d: int, seed: int = EIGENBASIS_SEED, attempts: int = 10,
                      tol: float = 1e-9) -> FourierEigenbasis:
    """Simultaneously diagonalise R_0, ..., R_{d-1}.

    A random real combination of the Hermitian and anti-Hermitian parts of all
    R_m is diagonalised; the result is accepted only if every R_m is diagonal
    in that basis, otherwise new coefficients are drawn.
    """
    rs = whm.r_family(d)
    herm = [0.5 * (r + dagger(r)) for r in rs]
    anti = [(r - dagger(r)) / 2j for r in rs]
    rng = XorShift64Star(seed)
    for _ in range(attempts):
        a = rng.normals(d)
        b = rng.normals(d)
        h = sum(a[m] * herm[m] + b[m] * anti[m] for m in range(d))
        _, q = hermitian_eig(h)
        ok = True
        for r in rs:
            t = dagger(q) @ r @ q
            if np.max(np.abs(t - np.diag(np.diag(t)))) >= tol:
                ok = False
                break
        if ok:
            break
    else:
        raise DegenerateCombination(f"no separating combination after {attempts} attempts")

    f = whm.fourier(d)
    vecs = [fix_phase(q[:, j]) for j in range(d)]
    f_eigs = [nearest_fourier_eigenvalue(complex(np.vdot(v, f @ v))) for v in vecs]
    r_eigs = [np.array([np.vdot(v, r @ v) for r in rs]) for v in vecs]
    order = sorted(range(d), key=lambda j: _sort_key(f_eigs[j], r_eigs[j]))
    return FourierEigenbasis(
        d=d,
        vectors=np.array([vecs[j] for j in order]),
        f_eigenvalues=np.array([f_eigs[j] for j in order], dtype=complex),
        r_eigenvalues=np.array([r_eigs[j] for j in order]),
    )


def kappa(d: int) -> float:
    return (math.sqrt(d + 1) - 1) / (d * math.sqrt(d + 1))


def x_matrix(d: int, m: int) -> np.ndarray:
    """R_m / sqrt(d+1) + kappa I: trace one and Frobenius-orthonormal over m."""
    return whm.r_matrix(d, m) / math.sqrt(d + 1) + kappa(d) * np.eye(d)


@dataclass(frozen=True)
class ProjectorCoefficients:
    d: int
    p: np.ndarray       # (i, r, s)
    lam: np.ndarray     # (i, m)
    kappa: float

    def reassemble(self, i: int) -> np.ndarray:
        """P_i = (1/(d sqrt(d+1))) sum_{r,s} p[i,r,s] W(r,s) + kappa I."""
        d = self.d
        w = whm.wh_all(d)
        return (np.einsum("rs,rsab->ab", self.p[i], w) / (d * math.sqrt(d + 1))
                + self.kappa * np.eye(d))


def quadratic_phases(d: int) -> np.ndarray:
    """Array (m, r, s) of tau^(m (r^2 + s^2))."""
    m = np.arange(d)[:, None, None]
    r = np.arange(d)[None, :, None]
    s = np.arange(d)[None, None, :]
    half = (d + 1) // 2
    e = (m * (r * r + s * s) * half) % d
    return np.exp(2j * np.pi * e / d)


def projector_coefficients(basis: FourierEigenbasis) -> ProjectorCoefficients:
    d = basis.d
    projs = basis.projectors()
    xs = np.array([x_matrix(d, m) for m in range(d)])
    lam = np.einsum("iab,mab->im", projs, xs.conj())
    p = np.einsum("im,mrs->irs", lam, quadratic_phases(d))
    return ProjectorCoefficients(d=d, p=p, lam=lam, kappa=kappa(d))


def fourier_phase(d: int) -> complex:
    """The unit c with R_{(d-1)/2} = c F; the Fourier matrix is one of the R_m up to phase."""
    r = whm.r_matrix(d, (d - 1) // 2)
    f = whm.fourier(d)
    c = np.vdot(f, r) / d
    return complex(c / abs(c))
