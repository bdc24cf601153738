"""Brute-force verification route on a truncated Fock space.

Everything in this module deliberately avoids the closed forms in `model`
and `cascade`: the interaction Hamiltonian is assembled matrix element by
matrix element from the raw parameters and exponentiated through a dense
Hermitian eigendecomposition.  Agreement between this route and the
analytic pipeline is the package's primary correctness evidence.

Conventions: basis states are photon-major with atoms in passage order, and
each atom index is 0 for excited, 1 for ground.  The interaction-picture
Hamiltonian commutes with the free part, so evolving with it alone is exact
for the reduced atomic state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cascade import AtomSequence
from .density import BASIS_FOR_SEQUENCE, STANDARD_TO_EG, TwoQubitDensity
from .fields import FieldSpec, truncation_for, weights
from .model import ModelParams

__all__ = [
    "TruncatedHilbert",
    "build_h_int",
    "evolve",
    "sequential_pass",
    "DEFAULT_MARGIN",
]

EXCITED, GROUND = 0, 1

# Photon headroom above the largest initially occupied Fock level.  Two
# transits can only climb four rungs, so anything >= 4 plus slack makes the
# truncation exact rather than approximate.
DEFAULT_MARGIN = 6

_NORM_DRIFT_TOL = 1.0e-10


@dataclass(frozen=True)
class TruncatedHilbert:
    """Index bookkeeping for field x atom(s) product states."""

    n_max: int
    n_atoms: int = 1

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if self.n_atoms not in (1, 2):
            raise ValueError(f"n_atoms must be 1 or 2, got {self.n_atoms}")

    @property
    def dim(self) -> int:
        return (self.n_max + 1) * 2**self.n_atoms

    def index(self, n: int, *spins: int) -> int:
        if not (0 <= n <= self.n_max):
            raise ValueError(f"photon number {n} outside [0, {self.n_max}]")
        if len(spins) != self.n_atoms:
            raise ValueError(f"expected {self.n_atoms} atom indices, got {len(spins)}")
        idx = n
        for s in spins:
            if s not in (EXCITED, GROUND):
                raise ValueError(f"atom index must be 0 (excited) or 1 (ground), got {s}")
            idx = idx * 2 + s
        return idx

    def unindex(self, idx: int) -> tuple[int, ...]:
        if not (0 <= idx < self.dim):
            raise ValueError(f"index {idx} outside [0, {self.dim})")
        spins = []
        for _ in range(self.n_atoms):
            spins.append(idx % 2)
            idx //= 2
        return (idx, *reversed(spins))

    def basis_state(self, n: int, *spins: int) -> np.ndarray:
        psi = np.zeros(self.dim, dtype=np.complex128)
        psi[self.index(n, *spins)] = 1.0
        return psi


def build_h_int(
    hilbert: TruncatedHilbert, params: ModelParams, which_atom: int = 0
) -> np.ndarray:
    """Dense interaction Hamiltonian for one atom coupled to the field.

    The other atom, if present, is a spectator (identity).  Terms: Kerr
    self-interaction of the field, the two dynamic level shifts (when
    enabled), and the two-photon exchange.  Rows above n_max - 2 have no
    raising coupling: a hard truncation, which is why callers must leave
    photon headroom (see DEFAULT_MARGIN).
    """
    if not (0 <= which_atom < hilbert.n_atoms):
        raise ValueError(
            f"which_atom {which_atom} outside the {hilbert.n_atoms}-atom space"
        )
    chi = params.chi_over_kappa
    h = np.zeros((hilbert.dim, hilbert.dim), dtype=np.complex128)
    for idx in range(hilbert.dim):
        n, *spins = hilbert.unindex(idx)
        diag = chi * n * (n - 1)
        if params.stark_enabled:
            shift = params.beta2 if spins[which_atom] == EXCITED else params.beta1
            diag += n * shift
        h[idx, idx] = diag
        if spins[which_atom] == EXCITED and n + 2 <= hilbert.n_max:
            up = list(spins)
            up[which_atom] = GROUND
            jdx = hilbert.index(n + 2, *up)
            g = np.sqrt((n + 1) * (n + 2))
            h[jdx, idx] += g
            h[idx, jdx] += g
    return h


def evolve(state: np.ndarray, hamiltonian: np.ndarray, t: float) -> np.ndarray:
    """Apply exp(-i H t) through a dense Hermitian eigendecomposition."""
    state = np.asarray(state, dtype=np.complex128)
    if hamiltonian.shape != (state.size, state.size):
        raise ValueError(
            f"state of size {state.size} does not fit Hamiltonian {hamiltonian.shape}"
        )
    w, v = np.linalg.eigh(hamiltonian)
    out = _propagate(w, v, state, t)
    if abs(np.linalg.norm(out) - np.linalg.norm(state)) > _NORM_DRIFT_TOL:
        raise ArithmeticError("unitarity lost during evolution")
    return out


def _propagate(w, v, state, t):
    return v @ (np.exp(-1j * w * t) * (v.conj().T @ state))


@lru_cache(maxsize=128)
def _eig_cached(n_max: int, n_atoms: int, which_atom: int, params: ModelParams):
    hilbert = TruncatedHilbert(n_max, n_atoms)
    w, v = np.linalg.eigh(build_h_int(hilbert, params, which_atom))
    return w, v


def sequential_pass(
    field: FieldSpec,
    sequence: AtomSequence,
    t: float,
    params: ModelParams,
    margin: int = DEFAULT_MARGIN,
) -> TwoQubitDensity:
    """Two-atom reduced state from direct evolution of the full product space.

    For every Fock component of the initial ensemble: evolve |n> x |e1> for
    a transit, adjoin the second atom in its prepared state, evolve again
    with the coupling moved to that atom, then trace out the field.  The
    ensemble mixes the resulting matrices with the field weights.

    margin is the photon headroom above the largest occupied level; at
    least 4 is required for the truncation to be exact.
    """
    if margin < 4:
        raise ValueError(f"margin must be >= 4 for an exact truncation, got {margin}")
    levels = weights(field)
    n_top = truncation_for(field)
    n_max = n_top + margin

    one = TruncatedHilbert(n_max, n_atoms=1)
    two = TruncatedHilbert(n_max, n_atoms=2)
    w1, v1 = _eig_cached(n_max, 1, 0, params)
    w2, v2 = _eig_cached(n_max, 2, 1, params)

    prepared = np.zeros(2, dtype=np.complex128)
    prepared[EXCITED if sequence is AtomSequence.EE else GROUND] = 1.0

    rho = np.zeros((4, 4), dtype=np.complex128)
    for n, p_n in levels:
        psi = _propagate(w1, v1, one.basis_state(n, EXCITED), t)
        joint = (psi.reshape(n_max + 1, 2)[:, :, None] * prepared).reshape(two.dim)
        joint = _propagate(w2, v2, joint, t)
        if abs(np.linalg.norm(joint) - 1.0) > _NORM_DRIFT_TOL:
            raise ArithmeticError("unitarity lost during the second transit")
        table = joint.reshape(n_max + 1, 4)
        # two transits emit at most four photons, so levels above n + 4 must
        # stay empty; anything there is truncation garbage
        boundary = float(np.sum(np.abs(table[n + 5 :, :]) ** 2))
        if boundary > field.tail_eps:
            raise ValueError(
                f"truncation at n_max={n_max} leaks population {boundary:.3e}; "
                "increase the margin"
            )
        rho += p_n * np.einsum("fa,fb->ab", table, table.conj())

    basis = BASIS_FOR_SEQUENCE[sequence]
    perm = STANDARD_TO_EG if sequence is AtomSequence.EG else (0, 1, 2, 3)
    rho = rho[np.ix_(perm, perm)]
    return TwoQubitDensity(matrix=rho, basis=basis)
