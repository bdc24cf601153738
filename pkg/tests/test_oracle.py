import cmath

import numpy as np
import pytest

from micromaser.cascade import AtomSequence
from micromaser.density import rho_eg, rho_ee
from micromaser.fields import FieldSpec
from micromaser.model import ModelParams, amp_K, amp_R, lambda_phase
from micromaser.oracle import (
    EXCITED,
    GROUND,
    TruncatedHilbert,
    build_h_int,
    evolve,
    sequential_pass,
)

from conftest import random_params


def test_hilbert_indexing_roundtrip():
    hil = TruncatedHilbert(n_max=3, n_atoms=2)
    assert hil.dim == 16
    for idx in range(hil.dim):
        labels = hil.unindex(idx)
        assert hil.index(*labels) == idx
    with pytest.raises(ValueError):
        hil.index(4, EXCITED, GROUND)
    with pytest.raises(ValueError):
        hil.index(1, EXCITED)
    with pytest.raises(ValueError):
        TruncatedHilbert(n_max=2, n_atoms=3)


def test_hamiltonian_structure():
    params = ModelParams(chi_over_kappa=0.7, r=0.5, stark_enabled=True)
    hil = TruncatedHilbert(n_max=8, n_atoms=1)
    h = build_h_int(hil, params)
    assert np.allclose(h, h.conj().T)
    # diagonal: Kerr chi n (n - 1) plus the state-dependent level shift
    n = 3
    e_idx = hil.index(n, EXCITED)
    g_idx = hil.index(n, GROUND)
    assert h[e_idx, e_idx] == pytest.approx(0.7 * n * (n - 1) + n * params.beta2, abs=1e-13)
    assert h[g_idx, g_idx] == pytest.approx(0.7 * n * (n - 1) + n * params.beta1, abs=1e-13)
    # coupling: <n+2, g| H |n, e> = sqrt((n+1)(n+2))
    up = hil.index(n + 2, GROUND)
    assert h[up, e_idx] == pytest.approx(np.sqrt((n + 1) * (n + 2)), abs=1e-13)
    # no pair emission above the truncation edge
    top = hil.index(hil.n_max - 1, EXCITED)
    assert np.all(h[:, top][np.arange(hil.dim) != top] == 0.0)


def test_evolution_is_unitary(rng):
    params = random_params(rng)
    hil = TruncatedHilbert(n_max=10, n_atoms=1)
    h = build_h_int(hil, params)
    psi = rng.normal(size=hil.dim) + 1j * rng.normal(size=hil.dim)
    psi /= np.linalg.norm(psi)
    assert np.allclose(evolve(psi, h, 0.0), psi, atol=1e-13)
    out = evolve(psi, h, 2.7)
    assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-12)


def test_single_transit_amplitudes_match_closed_form():
    # the closed-form K and R carry the block phase exp(-i (Lambda_n + chi) t)
    params = ModelParams(chi_over_kappa=0.6, r=0.8, stark_enabled=True)
    hil = TruncatedHilbert(n_max=14, n_atoms=1)
    h = build_h_int(hil, params)
    t = 1.9
    for n in (0, 1, 3, 6):
        out = evolve(hil.basis_state(n, EXCITED), h, t)
        block_phase = cmath.exp(-1j * (lambda_phase(n, params) + params.chi_over_kappa) * t)
        survive = out[hil.index(n, EXCITED)]
        emit = out[hil.index(n + 2, GROUND)]
        assert survive == pytest.approx(block_phase * amp_K(n, t, params), abs=1e-12)
        assert emit == pytest.approx(block_phase * amp_R(n + 2, t, params), abs=1e-12)


def test_margin_validation_and_insensitivity():
    params = ModelParams(chi_over_kappa=0.2, r=0.5, stark_enabled=True)
    field = FieldSpec.fock(1)
    with pytest.raises(ValueError):
        sequential_pass(field, AtomSequence.EE, 1.0, params, margin=3)
    lean = sequential_pass(field, AtomSequence.EE, 2.5, params, margin=4)
    wide = sequential_pass(field, AtomSequence.EE, 2.5, params, margin=10)
    assert np.max(np.abs(lean.matrix - wide.matrix)) < 1e-12


def test_oracle_matches_analytic_states(rng):
    for _ in range(6):
        params = random_params(rng)
        t = float(rng.uniform(0.2, 6.0))
        field = FieldSpec.fock(int(rng.integers(0, 4)))
        eg = sequential_pass(field, AtomSequence.EG, t, params)
        ee = sequential_pass(field, AtomSequence.EE, t, params)
        assert np.max(np.abs(eg.matrix - rho_eg(field, t, params).matrix)) < 1e-11
        assert np.max(np.abs(ee.matrix - rho_ee(field, t, params).matrix)) < 1e-11


def test_oracle_states_validate(rng):
    params = random_params(rng)
    rho = sequential_pass(FieldSpec.thermal(0.5), AtomSequence.EG, 3.3, params)
    rho.validate(x_tol=1e-9)
