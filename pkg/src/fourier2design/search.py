"""Search for Fourier eigenvector sets whose Weyl-Heisenberg orbit is a 2-design.

Candidates live inside the eigenspaces of F by construction: each eigenspace
basis Q (orthonormal columns) is rotated by exp(A) and the requested number
of leading columns is kept. With ``field="real"`` the basis is real and A is
real skew-symmetric (m(m-1)/2 parameters per block); with ``field="complex"``
A is anti-Hermitian (m^2 parameters). The objective is the frame-potential
excess of the candidate set's displacement orbit, minimised by Nelder-Mead
from seeded random starts.

Over complex rotations the d = 7 solutions form a continuous family, so only
the real search can single out one basis. A failed search is evidence, never
a proof that no solution exists.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

import numpy as np
import scipy.linalg
import scipy.optimize

from .design import design_bound, frame_potential_reduced
from .eigenbasis import F_EIGENVALUES, fourier_multiplicities
from .rng import XorShift64Star
from .weyl_heisenberg import fourier

NEGATIVE_RESULT_CAVEAT = ("no solution found at {restarts} restarts with best residual {best:.3e}; "
                          "this is numerical evidence, not a proof of nonexistence")
FIELDS = ("real", "complex")


@dataclass(frozen=True)
class EigenspaceFrame:
    d: int
    eigenvalues: tuple
    blocks: tuple       # complex (d, m) orthonormal bases, one per eigenvalue
    real_blocks: tuple  # real (d, m) orthonormal bases of the same eigenspaces

    def block(self, lam, field: str = "complex") -> np.ndarray:
        blocks = self.real_blocks if field == "real" else self.blocks
        return blocks[self.eigenvalues.index(lam)]

    def sizes(self) -> tuple:
        return tuple(b.shape[1] for b in self.blocks)


def spectral_projector(d: int, lam: complex) -> np.ndarray:
    """(1/4) sum_k lam^(-k) F^k, the projector onto ker(F - lam I)."""
    f = fourier(d)
    acc = np.zeros((d, d), dtype=complex)
    fk = np.eye(d, dtype=complex)
    for k in range(4):
        acc += lam ** (-k) * fk
        fk = fk @ f
    return acc / 4


def numerical_rank(m: np.ndarray, tol: float = 1e-8) -> int:
    return int(np.sum(np.linalg.svd(m, compute_uv=False) > tol))


def eigenspace_frame(d: int) -> EigenspaceFrame:
    mult = fourier_multiplicities(d)
    blocks, real_blocks = [], []
    for lam in F_EIGENVALUES:
        m = mult[lam]
        if m == 0:
            blocks.append(np.zeros((d, 0), dtype=complex))
            real_blocks.append(np.zeros((d, 0)))
            continue
        q, _, _ = scipy.linalg.qr(spectral_projector(d, lam), pivoting=True)
        q = q[:, :m]
        blocks.append(q)
        # F-eigenspaces are closed under complex conjugation, so Re and Im of
        # a basis span the same space over the reals.
        u, _, _ = np.linalg.svd(np.hstack([q.real, q.imag]), full_matrices=False)
        real_blocks.append(u[:, :m])
    return EigenspaceFrame(d=d, eigenvalues=F_EIGENVALUES, blocks=tuple(blocks),
                           real_blocks=tuple(real_blocks))


SubsetSpec = Union[str, tuple]


def resolve_subset(d: int, subset: SubsetSpec) -> tuple:
    """Per-eigenvalue counts (+1, -1, +i, -i); "full" means every eigenvector."""
    mult = fourier_multiplicities(d)
    if isinstance(subset, str):
        if subset != "full":
            raise ValueError(f"unknown subset spec {subset!r}")
        return tuple(mult[lam] for lam in F_EIGENVALUES)
    counts = tuple(int(c) for c in subset)
    if len(counts) != 4:
        raise ValueError("subset counts need one entry per eigenvalue (+1, -1, +i, -i)")
    for lam, c in zip(F_EIGENVALUES, counts):
        if not 0 <= c <= mult[lam]:
            raise ValueError(f"{c} vectors requested from eigenvalue {lam} of multiplicity {mult[lam]}")
    if sum(counts) == 0:
        raise ValueError("empty subset")
    return counts


def block_parameter_count(m: int, field: str) -> int:
    return m * m if field == "complex" else m * (m - 1) // 2


def parameter_count(frame: EigenspaceFrame, counts: tuple, field: str = "real") -> int:
    return sum(block_parameter_count(m, field) for m, c in zip(frame.sizes(), counts) if c > 0)


def anti_hermitian(params: np.ndarray, m: int) -> np.ndarray:
    """m^2 reals -> anti-Hermitian m x m: m imaginary diagonal entries, then
    m(m-1)/2 complex upper-triangle entries (real, imaginary interleaved)."""
    a = np.zeros((m, m), dtype=complex)
    a[np.diag_indices(m)] = 1j * params[:m]
    iu = np.triu_indices(m, 1)
    z = params[m::2] + 1j * params[m + 1::2]
    a[iu] = z
    a[(iu[1], iu[0])] = -np.conj(z)
    return a


def skew_symmetric(params: np.ndarray, m: int) -> np.ndarray:
    a = np.zeros((m, m))
    iu = np.triu_indices(m, 1)
    a[iu] = params
    a[(iu[1], iu[0])] = -params
    return a


def candidate_vectors(params, frame: EigenspaceFrame, counts: tuple,
                      field: str = "real") -> np.ndarray:
    """Rows are the candidate unit vectors, grouped by eigenvalue."""
    params = np.asarray(params, dtype=float)
    blocks = frame.real_blocks if field == "real" else frame.blocks
    generator = skew_symmetric if field == "real" else anti_hermitian
    out = []
    pos = 0
    for block, c in zip(blocks, counts):
        if c == 0:
            continue
        m = block.shape[1]
        n = block_parameter_count(m, field)
        rot = scipy.linalg.expm(generator(params[pos:pos + n], m)) if n else np.eye(m)
        pos += n
        out.append((block @ rot[:, :c]).T)
    return np.concatenate(out, axis=0).astype(complex)


def objective(params, frame: EigenspaceFrame, counts: tuple, field: str = "real") -> float:
    """Frame-potential excess of the displacement orbit of the candidate set."""
    vs = candidate_vectors(params, frame, counts, field)
    return frame_potential_reduced(vs, frame.d) - design_bound(frame.d)


@dataclass
class SearchConfig:
    d: int
    subset: SubsetSpec = "full"
    restarts: int = 20
    max_iterations: int = 20000
    seed: int = 1
    tolerance: float = 1e-8
    field: str = "real"
    jobs: int = 1

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be unsigned")
        if self.field not in FIELDS:
            raise ValueError(f"field must be one of {FIELDS}")
        if isinstance(self.subset, list):
            self.subset = tuple(self.subset)
        resolve_subset(self.d, self.subset)


@dataclass
class SearchResult:
    d: int
    best_residual: float
    best_vectors: np.ndarray
    per_restart_residuals: list
    converged: bool
    iterations_used: int
    best_restart: int
    counts: tuple
    field: str
    distinct_solutions: int = 0
    max_imag_after_phase: float = 0.0
    note: str = ""
    per_restart_iterations: list = field(default_factory=list)


def initial_simplex(x0: np.ndarray, scale: float = 0.3) -> np.ndarray:
    n = len(x0)
    simplex = np.tile(x0, (n + 1, 1))
    simplex[1:] += scale * np.eye(n)
    return simplex


def run_restart(d: int, counts: tuple, seed: int, max_iterations: int,
                field: str = "real") -> tuple[float, np.ndarray, int]:
    """One Nelder-Mead descent from a start drawn uniformly in [-pi, pi)^n."""
    frame = eigenspace_frame(d)
    n = parameter_count(frame, counts, field)
    x0 = XorShift64Star(seed).uniforms(n, -math.pi, math.pi)
    if n == 0:
        return objective(x0, frame, counts, field), x0, 0
    res = scipy.optimize.minimize(
        objective, x0, args=(frame, counts, field), method="Nelder-Mead",
        options={"initial_simplex": initial_simplex(x0), "maxiter": max_iterations,
                 "maxfev": 4 * max_iterations, "xatol": 1e-10, "fatol": 1e-12,
                 "adaptive": False})
    return float(res.fun), res.x, int(res.nit)


def _run_restart_packed(args):
    return run_restart(*args)


def alignment(a: np.ndarray, b: np.ndarray) -> tuple[float, np.ndarray]:
    """Match rows of ``a`` to rows of ``b`` up to per-vector phase.

    Returns the largest infidelity 1 - |<a_i|b_pi(i)>|^2 under the best
    permutation pi, together with pi.
    """
    fid = np.abs(a.conj() @ b.T) ** 2
    rows, cols = scipy.optimize.linear_sum_assignment(-fid)
    perm = cols[np.argsort(rows)]
    return float(np.max(1.0 - fid[np.arange(len(a)), perm])), perm


def max_imag_after_phase(vectors: np.ndarray) -> float:
    """Largest imaginary part left after rotating each vector by its best global phase."""
    worst = 0.0
    for v in vectors:
        # the phase making v as real as possible aligns v with its conjugate
        z = np.sum(v * v)
        phase = np.exp(-0.5j * np.angle(z)) if abs(z) > 0 else 1.0
        worst = max(worst, float(np.max(np.abs((v * phase).imag))))
    return worst


def count_distinct(solutions: list, tol: float = 1e-6) -> int:
    reps: list = []
    for s in solutions:
        if not any(len(s) == len(r) and alignment(s, r)[0] < tol for r in reps):
            reps.append(s)
    return len(reps)


def search(config: SearchConfig) -> SearchResult:
    counts = resolve_subset(config.d, config.subset)
    tasks = [(config.d, counts, config.seed + k, config.max_iterations, config.field)
             for k in range(config.restarts)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            runs = list(pool.map(_run_restart_packed, tasks))
    else:
        runs = [run_restart(*t) for t in tasks]
    residuals = [r[0] for r in runs]
    best = int(np.argmin(residuals))  # lowest restart index on ties
    frame = eigenspace_frame(config.d)
    vectors = candidate_vectors(runs[best][1], frame, counts, config.field)
    converged = residuals[best] < config.tolerance
    solved = [candidate_vectors(r[1], frame, counts, config.field)
              for r in runs if r[0] < config.tolerance]
    note = "" if converged else NEGATIVE_RESULT_CAVEAT.format(restarts=config.restarts,
                                                              best=residuals[best])
    return SearchResult(
        d=config.d, best_residual=residuals[best], best_vectors=vectors,
        per_restart_residuals=residuals, converged=converged,
        iterations_used=sum(r[2] for r in runs), best_restart=best, counts=counts,
        field=config.field, distinct_solutions=count_distinct(solved),
        max_imag_after_phase=max_imag_after_phase(vectors), note=note,
        per_restart_iterations=[r[2] for r in runs])
