"""Shared fixtures and random-state factories for the test suite."""

import numpy as np
import pytest

from micromaser.density import Basis, TwoQubitDensity
from micromaser.model import ModelParams


@pytest.fixture
def rng():
    return np.random.default_rng(181081)


def random_params(rng, stark=None):
    """A random but valid parameter set for property checks."""
    if stark is None:
        stark = bool(rng.integers(0, 2))
    return ModelParams(
        chi_over_kappa=float(rng.uniform(0.0, 3.0)),
        r=float(rng.uniform(0.05, 3.0)),
        stark_enabled=stark,
    )


def random_x_state(rng, basis=None):
    """A valid random X-type density matrix in the given basis."""
    if basis is None:
        basis = Basis.EG if rng.integers(0, 2) == 0 else Basis.EE
    diag = rng.dirichlet(np.ones(4))
    i, j = basis.coherence_pair
    # positivity of an X state needs |c|^2 <= rho_ii rho_jj
    magnitude = np.sqrt(diag[i] * diag[j]) * rng.uniform(0.0, 1.0)
    coh = magnitude * np.exp(2j * np.pi * rng.uniform())
    m = np.diag(diag).astype(np.complex128)
    m[i, j] = coh
    m[j, i] = np.conj(coh)
    return TwoQubitDensity(matrix=m, basis=basis)


def random_pure_state(rng):
    """A Haar-ish random two-qubit pure state density matrix, standard order."""
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    return psi, TwoQubitDensity(matrix=np.outer(psi, psi.conj()), basis=Basis.EE)
