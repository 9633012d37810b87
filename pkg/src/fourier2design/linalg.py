"""Dense complex linear algebra helpers.

Matrices are plain ``numpy`` arrays of dtype complex128. Every function
returns a fresh array and never mutates its inputs.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NotHermitian, ShapeMismatch


class HermitianEigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # ascending, real
    eigenvectors: np.ndarray  # columns orthonormal


def as_cmatrix(a) -> np.ndarray:
    m = np.array(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """tr(a b^dagger)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"{a.shape} vs {b.shape}")
    return complex(np.vdot(b, a))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def _offdiag_norm(h: np.ndarray) -> float:
    off = h.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def hermitian_eig(h, rel_tol: float = 1e-13, max_sweeps: int = 100) -> HermitianEigenDecomposition:
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Pivots are visited in row-major order (p < q), so the result is a
    deterministic function of the input. Iteration stops once the
    off-diagonal Frobenius norm drops below ``rel_tol * ||h||_F``.
    """
    h = as_cmatrix(h)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ShapeMismatch(f"expected a square matrix, got {h.shape}")
    scale = float(np.linalg.norm(h))
    if np.linalg.norm(h - dagger(h)) > 1e-10 * max(scale, 1e-300):
        raise NotHermitian("matrix is not Hermitian")
    a = 0.5 * (h + dagger(h))
    q = np.eye(n, dtype=complex)
    threshold = rel_tol * scale
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                b = a[p, r]
                mag = abs(b)
                if mag <= 1e-300:
                    continue
                phase = b / mag
                app = a[p, p].real
                arr = a[r, r].real
                theta = 0.5 * np.arctan2(2.0 * mag, app - arr)
                c, s = np.cos(theta), np.sin(theta)
                # columns are the eigenvectors of the 2x2 block [[app, b], [b*, arr]]
                rot = np.array([[c, -s * phase], [s * np.conj(phase), c]])
                idx = [p, r]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = dagger(rot) @ a[idx, :]
                a[p, r] = a[r, p] = 0.0
                a[p, p] = a[p, p].real
                a[r, r] = a[r, r].real
                q[:, idx] = q[:, idx] @ rot
    evals = np.real(np.diag(a))
    order = np.argsort(evals, kind="stable")
    return HermitianEigenDecomposition(evals[order], q[:, order])


def swap_operator(d: int) -> np.ndarray:
    """The d^2 x d^2 permutation with SWAP (x (x) y) = y (x) x."""
    s = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def sym_projector(d: int) -> np.ndarray:
    return 0.5 * (np.eye(d * d, dtype=complex) + swap_operator(d))


def partial_trace_second(m, d: int) -> np.ndarray:
    """Trace out the second tensor factor of a d^2 x d^2 matrix."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (d * d, d * d):
        raise ShapeMismatch(f"expected shape {(d * d, d * d)}, got {m.shape}")
    return np.einsum("ajbj->ab", m.reshape(d, d, d, d))
