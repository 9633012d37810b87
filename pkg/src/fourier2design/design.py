"""Weyl-Heisenberg orbits of rank-one projectors and projective 2-design tests.

A set of N unit vectors is a projective 2-design iff its frame potential
(1/N^2) sum |<a|b>|^4 attains the lower bound 2/(d(d+1)), equivalently iff
(1/N) sum P (x) P equals 2/(d(d+1)) times the symmetric projector.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import weyl_heisenberg as whm
from .eigenbasis import ProjectorCoefficients
from .errors import LengthMismatch, NotNormalized, TraceNotOne, WrongOrbit
from .linalg import sym_projector

DEFAULT_TOL = 1e-8


def design_bound(d: int) -> float:
    return 2.0 / (d * (d + 1))


def _displacements(d: int) -> np.ndarray:
    """(d*d, d, d) stack indexed by k*d + l: W(k,l) for odd d, V^k U^l for even d."""
    if d % 2:
        return whm.wh_all(d).reshape(d * d, d, d)
    return np.array([whm.displacement(k, l, d) for k in range(d) for l in range(d)])


def _as_vectors(base_vectors, d: int) -> np.ndarray:
    vs = np.atleast_2d(np.asarray(base_vectors, dtype=complex))
    if vs.shape[1] != d:
        raise LengthMismatch(f"vectors have length {vs.shape[1]}, expected {d}")
    norms = np.linalg.norm(vs, axis=1)
    if np.any(np.abs(norms - 1) > 1e-10):
        raise NotNormalized(f"base vector norms {norms}")
    return vs


@dataclass(frozen=True)
class ProjectorOrbit:
    d: int
    base_count: int
    vectors: np.ndarray  # (N, d); row (i*d + k)*d + l is W(k,l) psi_i
    index: np.ndarray    # (N, 3) triples (i, k, l)

    @property
    def N(self) -> int:
        return len(self.vectors)

    @cached_property
    def projectors(self) -> np.ndarray:
        return np.einsum("na,nb->nab", self.vectors, self.vectors.conj())

    def base_vectors(self) -> np.ndarray:
        return self.vectors[:: self.d * self.d]


def wh_orbit(base_vectors, d: int) -> ProjectorOrbit:
    vs = _as_vectors(base_vectors, d)
    disp = _displacements(d)
    # (i, kl, a)
    orbit = np.einsum("xab,ib->ixa", disp, vs).reshape(-1, d)
    n = len(vs)
    idx = np.array([(i, k, l) for i in range(n) for k in range(d) for l in range(d)])
    return ProjectorOrbit(d=d, base_count=n, vectors=orbit, index=idx)


def frame_potential_full(vectors: np.ndarray, chunk: int = 2048) -> float:
    """(1/N^2) sum_{a,b} |<a|b>|^4 over every ordered pair."""
    n = len(vectors)
    total = 0.0
    for start in range(0, n, chunk):
        g = vectors[start:start + chunk].conj() @ vectors.T
        total += float(np.sum(np.abs(g) ** 4))
    return total / (n * n)


def frame_potential_reduced(base: np.ndarray, d: int) -> float:
    """Frame potential of the full displacement orbit of ``base``.

    tr(P_a P_b) only depends on the relative displacement, so it suffices to
    fix the displacement of the first vector:
    FP = (1/(n^2 d^2)) sum_{i,j,k,l} |<psi_i| W(k,l) psi_j>|^4.
    """
    n = len(base)
    disp = _displacements(d)
    moved = np.einsum("xab,jb->xja", disp, base)          # (kl, j, a)
    ov = np.einsum("ia,xja->xij", base.conj(), moved)
    return float(np.sum(np.abs(ov) ** 4)) / (n * n * d * d)


def frame_potential(orbit: ProjectorOrbit, method: str = "auto") -> tuple[float, float, float]:
    """Return (frame potential, bound, residual). ``method`` is auto, full or reduced."""
    d = orbit.d
    if method == "auto":
        method = "reduced" if d >= 11 else "full"
    if method == "full":
        fp = frame_potential_full(orbit.vectors)
    elif method == "reduced":
        fp = frame_potential_reduced(orbit.base_vectors(), d)
    else:
        raise ValueError(f"unknown method {method!r}")
    bound = design_bound(d)
    return fp, bound, fp - bound


def second_moment(orbit: ProjectorOrbit, chunk: int = 1024) -> np.ndarray:
    """(1/N) sum P (x) P, accumulated as M M^dagger with columns v (x) v."""
    d = orbit.d
    acc = np.zeros((d * d, d * d), dtype=complex)
    for start in range(0, orbit.N, chunk):
        v = orbit.vectors[start:start + chunk]
        m = np.einsum("na,nb->nab", v, v).reshape(len(v), d * d)
        acc += m.T @ m.conj()
    return acc / orbit.N


def sym_residual(orbit: ProjectorOrbit) -> float:
    d = orbit.d
    return float(np.linalg.norm(second_moment(orbit) - design_bound(d) * sym_projector(d)))


def coefficient_residual(coeffs: ProjectorCoefficients) -> float:
    """max over (r, s) of |sum_i |p_i^(r,s)|^2 - d|."""
    return float(np.max(np.abs(np.sum(np.abs(coeffs.p) ** 2, axis=0) - coeffs.d)))


@dataclass
class DesignReport:
    d: int
    N: int
    frame_potential: float
    fp_bound: float
    fp_residual: float
    sym_residual: Optional[float]
    coeff_residual: Optional[float]
    is_2design: bool
    tolerance: float

    def to_dict(self) -> dict:
        return asdict(self)


def certify(orbit: ProjectorOrbit, tol: float = DEFAULT_TOL,
            coefficients: Optional[ProjectorCoefficients] = None,
            fp_method: str = "auto", with_sym: bool = True) -> DesignReport:
    fp, bound, res = frame_potential(orbit, fp_method)
    sym = sym_residual(orbit) if with_sym else None
    coeff = coefficient_residual(coefficients) if coefficients is not None else None
    ok = res < tol and (sym is None or sym < tol)
    return DesignReport(d=orbit.d, N=orbit.N, frame_potential=fp, fp_bound=bound,
                        fp_residual=res, sym_residual=sym, coeff_residual=coeff,
                        is_2design=bool(ok), tolerance=tol)


def is_sic_fiducial(v, d: int, tol: float = 1e-8) -> tuple[bool, np.ndarray]:
    """Check |<v|W(r,s) v>|^2 = 1/(d+1) for all (r,s) != (0,0).

    Returns the verdict and the (d, d) table of squared overlaps.
    """
    v = _as_vectors(v, d)[0]
    w = whm.wh_all(d)
    table = np.abs(np.einsum("a,rsab,b->rs", v.conj(), w, v)) ** 2
    mask = np.ones((d, d), dtype=bool)
    mask[0, 0] = False
    ok = bool(np.all(np.abs(table[mask] - 1.0 / (d + 1)) < tol))
    return ok, table


def tomography_coefficients(rho, orbit: ProjectorOrbit) -> np.ndarray:
    """(1/d^2) tr(rho P) for each of the d^3 orbit projectors, in orbit order."""
    d = orbit.d
    rho = np.asarray(rho, dtype=complex)
    if orbit.N != d ** 3:
        raise WrongOrbit(f"need the full d^3 = {d ** 3} orbit, got N = {orbit.N}")
    if rho.shape != (d, d):
        raise LengthMismatch(f"rho has shape {rho.shape}, expected {(d, d)}")
    if abs(np.trace(rho) - 1) > 1e-10:
        raise TraceNotOne(f"tr(rho) = {np.trace(rho)}")
    v = orbit.vectors
    # tr(rho |v><v|) = <v|rho|v>
    return np.einsum("na,ab,nb->n", v.conj(), rho, v) / d ** 2


def reconstruct_state(coeffs, orbit: ProjectorOrbit) -> np.ndarray:
    """rho = (d + 1) sum_n c_n P_n - I."""
    d = orbit.d
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (orbit.N,) or orbit.N != d ** 3:
        raise LengthMismatch(f"expected {d ** 3} coefficients, got {c.shape}")
    v = orbit.vectors
    return (d + 1) * np.einsum("n,na,nb->ab", c, v, v.conj()) - np.eye(d)


def proof_chain(coeffs: ProjectorCoefficients) -> dict[str, np.ndarray]:
    """The three stages of the 2-design identity for an R_m eigenbasis.

    ``direct`` is (1/d^3) sum P_i^(k,l) (x) P_i^(k,l) built from the
    reassembled P_i, ``expanded`` the expression after collapsing the
    Weyl-Heisenberg tensor sums (using |p|^2 and p^(0,0) = 1), and ``final``
    the symmetric-projector form.
    """
    d = coeffs.d
    w = whm.wh_all(d)
    projs = np.array([coeffs.reassemble(i) for i in range(d)])
    conj = np.einsum("klab,ibc,kldc->iklad", w, projs, w.conj())
    direct = np.einsum("iklab,iklcd->acbd", conj, conj).reshape(d * d, d * d) / d ** 3
    neg = w[(-np.arange(d)) % d][:, (-np.arange(d)) % d]
    weight = np.sum(np.abs(coeffs.p) ** 2, axis=0)
    ww = np.einsum("rs,rsab,rscd->acbd", weight, w, neg).reshape(d * d, d * d)
    eye = np.eye(d * d)
    expanded = ww / (d ** 3 * (d + 1)) + eye / (d * (d + 1))
    final = design_bound(d) * sym_projector(d)
    return {"direct": direct, "expanded": expanded, "final": final}
