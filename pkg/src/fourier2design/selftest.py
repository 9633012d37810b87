"""Aggregate numerical checks of every identity the package relies on."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import design
from . import number_theory as nt
from . import weyl_heisenberg as whm
from .eigenbasis import (FourierEigenbasis, common_eigenbasis, fourier_multiplicities,
                         projector_coefficients, x_matrix)
from .linalg import frobenius_inner, kron, swap_operator
from .search import eigenspace_frame


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    seconds: float


def perturbed(basis: FourierEigenbasis, eps: float) -> FourierEigenbasis:
    """Tilt every vector towards e_0 by ``eps`` and renormalise (negative control)."""
    if eps == 0:
        return basis
    v = basis.vectors.copy()
    v[:, 0] += eps
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return FourierEigenbasis(basis.d, v, basis.f_eigenvalues, basis.r_eigenvalues)


def _gauss(max_d: int) -> float:
    worst = 0.0
    for d in range(3, max(max_d, 43) + 1):
        if nt.classify_modulus(d).residue_class == "3 mod 4":
            for a in range(1, d):
                worst = max(worst, abs(nt.quadratic_gauss_sum(a, d) ** 2 + d))
    return worst


def _r_traces(ds) -> float:
    worst = 0.0
    for d in ds:
        rs = whm.r_family(d)
        for m, r in enumerate(rs):
            worst = max(worst, abs(np.trace(r) - 1))
            for mp, rp in enumerate(rs):
                want = d if m == mp else -1
                worst = max(worst, abs(frobenius_inner(r, rp) - want))
    return worst


def _x_orthonormal(ds) -> float:
    worst = 0.0
    for d in ds:
        xs = [x_matrix(d, m) for m in range(d)]
        for m, x in enumerate(xs):
            worst = max(worst, abs(np.trace(x) - 1))
            for mp, xp in enumerate(xs):
                worst = max(worst, abs(frobenius_inner(x, xp) - (m == mp)))
    return worst


def _projector_coeffs(bases) -> float:
    worst = 0.0
    for b in bases:
        d = b.d
        pc = projector_coefficients(b)
        neg = (-np.arange(d)) % d
        worst = max(worst,
                    np.max(np.abs(pc.p[:, 0, 0] - 1)),
                    np.max(np.abs(np.conj(pc.p) - pc.p[:, neg][:, :, neg])),
                    design.coefficient_residual(pc),
                    np.max(np.abs(pc.lam.conj().T @ pc.lam - np.eye(d))),
                    max(np.max(np.abs(pc.reassemble(i) - P)) for i, P in enumerate(b.projectors())))
    return float(worst)


def _commutation(ds) -> float:
    worst = 0.0
    for d in ds:
        w = whm.wh_all(d)
        for k in range(d):
            for l in range(d):
                for r in range(d):
                    for s in range(d):
                        lhs = w[k, l] @ w[r, s]
                        e = r * l - s * k
                        worst = max(worst,
                                    np.max(np.abs(lhs - nt.tau_power(2 * e, d) * w[r, s] @ w[k, l])),
                                    np.max(np.abs(lhs - nt.tau_power(e, d) * w[(k + r) % d, (l + s) % d])))
    return worst


def _wh_orthogonality(ds) -> float:
    worst = 0.0
    for d in ds:
        w = whm.wh_all(d).reshape(d * d, d, d)
        gram = np.einsum("xab,yab->xy", w, w.conj())
        worst = max(worst, np.max(np.abs(gram - d * np.eye(d * d))))
    return worst


def _twirl_collapse(d: int = 3) -> float:
    w = whm.wh_all(d)
    worst = 0.0
    for r in range(d):
        for s in range(d):
            for rp in range(d):
                for sp in range(d):
                    acc = np.zeros((d * d, d * d), dtype=complex)
                    for k in range(d):
                        for l in range(d):
                            c = w[k, l]
                            ci = c.conj().T
                            acc += kron(c @ w[r, s] @ ci, c @ w[rp, sp] @ ci)
                    if (rp + r) % d == 0 and (sp + s) % d == 0:
                        want = d * d * kron(w[r, s], w[rp, sp])
                    else:
                        want = 0
                    worst = max(worst, np.max(np.abs(acc - want)))
    return worst


def _swap_expansion(ds) -> float:
    worst = 0.0
    for d in ds:
        w = whm.wh_all(d)
        acc = sum(kron(w[r, s], w[(-r) % d, (-s) % d]) for r in range(d) for s in range(d)) / d
        worst = max(worst, np.max(np.abs(acc - swap_operator(d))))
    return worst


def _fourier_conj(ds) -> float:
    worst = 0.0
    for d in ds:
        f = whm.fourier(d)
        fi = f.conj().T
        for r in range(d):
            for s in range(d):
                worst = max(worst, np.max(np.abs(f @ whm.wh(r, s, d) @ fi - whm.wh(-s, r, d))))
    return worst


def _fsl_orders(max_p: int = 23) -> float:
    bad = 0
    for d in range(3, max_p + 1):
        if not nt.classify_modulus(d).is_odd_prime:
            continue
        n = len(whm.fsl_elements(d))
        want = d - 1 if d % 4 == 1 else d + 1
        bad += (n != want) + (whm.fsl_generator(d).order() != n)
    return float(bad)


def _clifford_forms(ds) -> float:
    worst = 0.0
    for d in ds:
        for g in whm.fsl_elements(d):
            if g.beta == 0:
                continue
            u = whm.clifford_rep_appleby(g)
            worst = max(worst, whm.phase_distance(u, whm.clifford_rep_wh_expansion(g)))
            for r in range(d):
                for s in range(d):
                    r2, s2 = g.base.act(r, s)
                    worst = max(worst, np.max(np.abs(u @ whm.wh(r, s, d) @ u.conj().T - whm.wh(r2, s2, d))))
    return worst


def _m_bijection(ds) -> float:
    bad = 0
    for d in ds:
        seen = set()
        for m in range(d):
            g = whm.m_to_group(m, d)
            bad += whm.group_to_m(g, d) != m
            seen.add((g.alpha, g.beta))
        bad += len(seen) != d
    return float(bad)


def _multiplicities(max_d: int = 24) -> float:
    bad = 0
    for d in range(2, max_d + 1):
        frame = eigenspace_frame(d)
        mult = fourier_multiplicities(d)
        bad += tuple(mult.values()) != frame.sizes()
    return float(bad)


def _orbit_design(bases) -> float:
    worst = 0.0
    for b in bases:
        report = design.certify(design.wh_orbit(b.vectors, b.d))
        worst = max(worst, abs(report.fp_residual), report.sym_residual)
    return worst


def _coefficient_criterion(bases) -> float:
    return max(design.coefficient_residual(projector_coefficients(b)) for b in bases)


def _tomography(bases, samples: int = 20, seed: int = 7) -> float:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for b in bases:
        d = b.d
        orbit = design.wh_orbit(b.vectors, d)
        for _ in range(samples):
            a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
            rho = a / np.trace(a)
            rec = design.reconstruct_state(design.tomography_coefficients(rho, orbit), orbit)
            worst = max(worst, float(np.linalg.norm(rec - rho)))
    return worst


def run_checks(max_d: int = 11, perturb: float = 0.0) -> list[CheckResult]:
    ds = [d for d in (3, 7, 11, 19, 23) if d <= max(max_d, 11)]
    core = [d for d in ds if d <= 11]
    bases = {d: perturbed(common_eigenbasis(d), perturb) for d in ds}
    core_bases = [bases[d] for d in core]
    checks: list[tuple[str, Callable[[], float], float]] = [
        ("Gauss sum squares = -d (d <= 43)", lambda: _gauss(max_d), 1e-10),
        ("R_m: tr R_m = 1, tr R_m R_m'* in {-1, d}", lambda: _r_traces(ds), 1e-10),
        ("X_m: orthonormal, trace 1", lambda: _x_orthonormal(ds), 1e-10),
        ("projector coefficients: p^(0,0) = 1, conjugate symmetry, |p|^2 sums, reassembly",
         lambda: _projector_coeffs(core_bases), 1e-9),
        ("WH commutation and products (d = 3, 5, 7)", lambda: _commutation((3, 5, 7)), 1e-12),
        ("WH orthogonality (d = 3, 5, 7, 11)", lambda: _wh_orthogonality((3, 5, 7, 11)), 1e-10),
        ("conjugation tensor-sum collapse (d = 3)", lambda: _twirl_collapse(3), 1e-10),
        ("SWAP expansion (d = 3, 5, 7)", lambda: _swap_expansion((3, 5, 7)), 1e-11),
        ("F W(r,s) F^-1 = W(-s,r)", lambda: _fourier_conj((3, 5, 7, 11, 13)), 1e-12),
        ("FSL orders d -+ 1 with cyclic generator (d <= 23)", lambda: _fsl_orders(23), 0.5),
        ("Appleby vs WH-expansion Clifford forms", lambda: _clifford_forms((3, 7, 11)), 1e-10),
        ("m <-> G bijection", lambda: _m_bijection([d for d in (3, 7, 11, 19)]), 0.5),
        ("Fourier multiplicity table (d = 2..24)", lambda: _multiplicities(24), 0.5),
        ("R_m eigenbasis orbit is a 2-design", lambda: _orbit_design(core_bases), 1e-8),
        ("tomography round trip", lambda: _tomography(core_bases), 1e-9),
    ]
    big = [bases[d] for d in ds if d > 11]
    if big:
        checks.append((f"Coefficient criterion (d = {', '.join(str(b.d) for b in big)})",
                       lambda: _coefficient_criterion(big), 1e-8))
    results = []
    for name, fn, tol in checks:
        t0 = time.perf_counter()
        value = float(fn())
        results.append(CheckResult(name, bool(value < tol and math.isfinite(value)), value, tol,
                                   time.perf_counter() - t0))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  result  {'value':>10}  {'tol':>8}"]
    for r in results:
        lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  "
                     f"{r.value:10.2e}  {r.tolerance:8.0e}")
    return "\n".join(lines)
