import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fourier2design import design
from fourier2design.eigenbasis import projector_coefficients
from fourier2design.errors import LengthMismatch, NotNormalized, TraceNotOne, WrongOrbit
from fourier2design.weyl_heisenberg import displacement, wh

from conftest import random_trace_one


def haar_basis(rng, d):
    q, _ = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
    return q.T


def brute_frame_potential(vectors):
    n = len(vectors)
    total = 0.0
    for a in vectors:
        for b in vectors:
            total += abs(np.vdot(a, b)) ** 4
    return total / n ** 2


def test_orbit_sizes(basis):
    b = basis(3)
    assert design.wh_orbit(b.vectors, 3).N == 27
    assert design.wh_orbit(b.vectors[:2], 3).N == 18
    o = design.wh_orbit(np.eye(3)[:1], 3)
    assert o.N == 9
    for p in o.projectors:
        assert np.count_nonzero(np.abs(p) > 1e-12) == 1


def test_orbit_projectors_match_definition(basis):
    d = 7
    b = basis(d)
    o = design.wh_orbit(b.vectors, d)
    for n, (i, k, l) in enumerate(o.index):
        w = wh(k, l, d)
        want = w @ np.outer(b.vectors[i], b.vectors[i].conj()) @ w.conj().T
        assert np.max(np.abs(o.projectors[n] - want)) < 1e-12
    for p in o.projectors[::17]:
        assert np.linalg.norm(p @ p - p) < 1e-10
        assert abs(np.trace(p) - 1) < 1e-10
        assert np.allclose(p, p.conj().T)


def test_orbit_even_d_uses_plain_displacements(rng):
    d = 4
    v = haar_basis(rng, d)[:1]
    o = design.wh_orbit(v, d)
    assert np.allclose(o.vectors[1 * d + 3], displacement(1, 3, d) @ v[0])


def test_orbit_rejects_unnormalised():
    with pytest.raises(NotNormalized):
        design.wh_orbit([[1, 1, 0]], 3)


def test_frame_potential_examples(basis):
    b = basis(3)
    fp, bound, res = design.frame_potential(design.wh_orbit(b.vectors, 3))
    assert abs(fp - 1 / 6) < 1e-10 and bound == 1 / 6
    fp, _, _ = design.frame_potential(design.wh_orbit(b.vectors[:2], 3))
    assert abs(fp - 1 / 6) < 1e-10
    single = design.ProjectorOrbit(3, 1, np.eye(3)[:1].astype(complex), np.zeros((1, 3), int))
    fp, bound, res = design.frame_potential(single, "full")
    assert fp == 1 and abs(res - (1 - 2 / 12)) < 1e-15


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7])
def test_frame_potential_paths_agree_with_brute_force(d, rng):
    v = haar_basis(rng, d)[: max(2, d // 2)]
    o = design.wh_orbit(v, d)
    brute = brute_frame_potential(o.vectors)
    assert abs(design.frame_potential(o, "full")[0] - brute) < 1e-12
    assert abs(design.frame_potential(o, "reduced")[0] - brute) < 1e-10


@pytest.mark.parametrize("d", [3, 5, 7])
def test_frame_potential_is_lower_bounded(d, rng):
    for _ in range(5):
        o = design.wh_orbit(haar_basis(rng, d), d)
        assert design.frame_potential(o)[2] >= -1e-12


def test_second_moment_matches_explicit_sum(basis):
    d = 3
    o = design.wh_orbit(basis(d).vectors[:2], d)
    want = sum(np.kron(p, p) for p in o.projectors) / o.N
    assert np.max(np.abs(design.second_moment(o) - want)) < 1e-14


def test_sym_residual_examples(basis):
    assert design.sym_residual(design.wh_orbit(basis(7).vectors, 7)) < 1e-9
    assert design.sym_residual(design.wh_orbit(basis(3).vectors, 3)) < 1e-10
    assert design.sym_residual(design.wh_orbit(np.eye(3), 3)) > 0.1


def test_standard_basis_orbit_frame_potential():
    fp, _, _ = design.frame_potential(design.wh_orbit(np.eye(3), 3))
    assert abs(fp - 1 / 3) < 1e-14


@pytest.mark.parametrize("d", [3, 7, 11])
def test_criteria_agree_positive(d, basis):
    r = design.certify(design.wh_orbit(basis(d).vectors, d),
                       coefficients=projector_coefficients(basis(d)))
    assert r.fp_residual < 1e-9 and r.sym_residual < 1e-8 and r.is_2design
    assert r.coeff_residual < 1e-9
    assert r.N == d ** 3 and r.fp_bound == 2 / (d * (d + 1))


@pytest.mark.parametrize("d", [3, 5, 7])
def test_criteria_agree_negative(d, rng):
    for vecs in (np.eye(d), haar_basis(rng, d)):
        r = design.certify(design.wh_orbit(vecs, d))
        assert (r.fp_residual < 1e-9) == (r.sym_residual < 1e-8) == r.is_2design is False


def test_additivity_d3(basis):
    b = basis(3)
    sic = design.wh_orbit(b.vectors[2:], 3)
    rest = design.wh_orbit(b.vectors[:2], 3)
    assert design.certify(sic).is_2design and design.certify(rest).is_2design
    both = design.wh_orbit(b.vectors, 3)
    assert design.certify(both).is_2design


def test_sic_fiducial(basis):
    b = basis(3)
    ok, table = design.is_sic_fiducial(b.vectors[2], 3)
    assert ok
    mask = np.ones((3, 3), bool)
    mask[0, 0] = False
    assert np.max(np.abs(table[mask] - 0.25)) < 1e-10
    assert not design.is_sic_fiducial(b.vectors[0], 3)[0]
    ok, table = design.is_sic_fiducial(np.eye(3)[0], 3)
    assert not ok and set(np.round(table.ravel(), 12)) == {0.0, 1.0}
    with pytest.raises(NotNormalized):
        design.is_sic_fiducial([1, 1, 1], 3)


def test_tomography_coefficients(basis, rng):
    d = 3
    o = design.wh_orbit(basis(d).vectors, d)
    c = design.tomography_coefficients(np.eye(d) / d, o)
    assert np.allclose(c, 1 / d ** 3)
    c = design.tomography_coefficients(o.projectors[0], o)
    assert abs(c[0] - 1 / d ** 2) < 1e-14
    d = 7
    o = design.wh_orbit(basis(d).vectors, d)
    rho = random_trace_one(rng, d)
    c = design.tomography_coefficients(rho, o)
    direct = np.array([np.trace(rho @ p) for p in o.projectors]) / d ** 2
    assert np.max(np.abs(c - direct)) < 1e-14
    # the d^3 projectors add up to d^2 I, so the coefficients add up to tr(rho)
    assert abs(c.sum() - 1) < 1e-12


def test_tomography_errors(basis):
    o = design.wh_orbit(basis(3).vectors, 3)
    with pytest.raises(TraceNotOne):
        design.tomography_coefficients(2 * np.eye(3) / 3, o)
    with pytest.raises(WrongOrbit):
        design.tomography_coefficients(np.eye(3) / 3, design.wh_orbit(basis(3).vectors[:2], 3))
    with pytest.raises(LengthMismatch):
        design.reconstruct_state(np.ones(5), o)


def test_round_trip_maximally_mixed(basis):
    o = design.wh_orbit(basis(3).vectors, 3)
    rho = np.eye(3) / 3
    rec = design.reconstruct_state(design.tomography_coefficients(rho, o), o)
    assert np.max(np.abs(rec - rho)) < 1e-12


def test_round_trip_random_d7(basis, rng):
    d = 7
    o = design.wh_orbit(basis(d).vectors, d)
    worst = 0.0
    for _ in range(100):
        rho = random_trace_one(rng, d)
        worst = max(worst, np.linalg.norm(design.reconstruct_state(design.tomography_coefficients(rho, o), o) - rho))
    assert worst < 1e-9


def test_round_trip_non_hermitian_d3(basis, rng):
    o = design.wh_orbit(basis(3).vectors, 3)
    rho = random_trace_one(rng, 3, hermitian=False)
    assert not np.allclose(rho, rho.conj().T)
    rec = design.reconstruct_state(design.tomography_coefficients(rho, o), o)
    assert np.max(np.abs(rec - rho)) < 1e-10


def test_round_trip_fails_for_non_design(rng):
    d = 3
    o = design.wh_orbit(np.eye(d), d)
    rho = random_trace_one(rng, d)
    rec = design.reconstruct_state(design.tomography_coefficients(rho, o), o)
    assert np.linalg.norm(rec - rho) > 1e-3


@pytest.mark.parametrize("d", [3, 7, 11])
def test_proof_chain(d, basis):
    chain = design.proof_chain(projector_coefficients(basis(d)))
    assert np.max(np.abs(chain["direct"] - chain["expanded"])) < 1e-9
    assert np.max(np.abs(chain["expanded"] - chain["final"])) < 1e-9
    # direct tensor sum from the actual orbit projectors
    o = design.wh_orbit(basis(d).vectors, d)
    assert np.max(np.abs(design.second_moment(o) - chain["direct"])) < 1e-9


def test_report_json_fields(basis):
    r = design.certify(design.wh_orbit(basis(3).vectors, 3))
    assert set(r.to_dict()) == {"d", "N", "frame_potential", "fp_bound", "fp_residual",
                                "sym_residual", "coeff_residual", "is_2design", "tolerance"}
    assert math.isclose(r.tolerance, 1e-8)


@settings(max_examples=40, deadline=None)
@given(d=st.integers(2, 7), n=st.integers(1, 4), seed=st.integers(0, 2 ** 32 - 1))
def test_frame_potential_never_below_bound(d, n, seed):
    g = np.random.default_rng(seed)
    v = g.normal(size=(n, d)) + 1j * g.normal(size=(n, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    o = design.wh_orbit(v, d)
    fp, bound, res = design.frame_potential(o, "full")
    assert res >= -1e-12
    assert abs(design.frame_potential(o, "reduced")[0] - fp) < 1e-10
