"""Reduced two-atom density matrices after both cavity transits.

The reduced state is always an X-type matrix: populations on the diagonal
plus a single coherence pair, because only two of the four branches share a
final field state.  Which pair depends on the preparation, and each
preparation carries its own conventional basis ordering:

  EG (second atom ground):   (e1 g2, e1 e2, g1 g2, g1 e2), coherence (1,4)
  EE (second atom excited):  (e1 e2, e1 g2, g1 e2, g1 g2), coherence (2,3)

Entries are assembled by the `kernels` backends; `cascade` holds the scalar
form of the same sums and the tests keep the two in lockstep.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .cascade import AtomSequence
from .fields import FieldSpec, weights
from .model import ModelParams

__all__ = [
    "Basis",
    "TwoQubitDensity",
    "XEntries",
    "density_entries",
    "rho_eg",
    "rho_ee",
    "BASIS_FOR_SEQUENCE",
    "STANDARD_TO_EG",
]

HERMITICITY_TOL = 1.0e-12
TRACE_TOL = 1.0e-10
PSD_TOL = -1.0e-10
X_STRUCTURE_TOL = 1.0e-9


class Basis(Enum):
    """Basis ordering conventions for the two preparations."""

    EG = "eg"
    EE = "ee"

    @property
    def coherence_pair(self) -> tuple[int, int]:
        """Zero-based positions of the single allowed coherence."""
        return (0, 3) if self is Basis.EG else (1, 2)

    @property
    def partner_pair(self) -> tuple[int, int]:
        """Diagonal pair not touched by the coherence."""
        return (1, 2) if self is Basis.EG else (0, 3)

    @property
    def standard_order(self) -> tuple[int, int, int, int]:
        """Positions of (e1e2, e1g2, g1e2, g1g2) within this ordering."""
        return (1, 0, 3, 2) if self is Basis.EG else (0, 1, 2, 3)


BASIS_FOR_SEQUENCE = {AtomSequence.EG: Basis.EG, AtomSequence.EE: Basis.EE}

# Permutation taking a matrix in standard product order to EG order.
STANDARD_TO_EG = (1, 0, 3, 2)


@dataclass(frozen=True)
class TwoQubitDensity:
    """A 4x4 reduced density matrix together with its basis convention."""

    matrix: np.ndarray
    basis: Basis

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)

    def validate(
        self,
        hermiticity_tol: float = HERMITICITY_TOL,
        trace_tol: float = TRACE_TOL,
        psd_tol: float = PSD_TOL,
        x_tol: float | None = X_STRUCTURE_TOL,
    ) -> "TwoQubitDensity":
        """Check Hermiticity, unit trace, positivity and the X pattern.

        Raises ValueError on the first violated property; returns self so
        calls can be chained.  Pass x_tol=None to skip the pattern check.
        """
        m = self.matrix
        herm = np.max(np.abs(m - m.conj().T))
        if herm > hermiticity_tol:
            raise ValueError(f"matrix not Hermitian: deviation {herm:.3e}")
        tr = abs(m.trace().real - 1.0) + abs(m.trace().imag)
        if tr > trace_tol:
            raise ValueError(f"trace differs from 1 by {tr:.3e}")
        min_eig = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min())
        if min_eig < psd_tol:
            raise ValueError(f"matrix not positive semidefinite: min eigenvalue {min_eig:.3e}")
        if x_tol is not None:
            off = self.x_violation()
            if off > x_tol:
                raise ValueError(f"X structure violated by {off:.3e}")
        return self

    def x_violation(self) -> float:
        """Largest entry outside the diagonal plus allowed coherence pair."""
        mask = np.ones((4, 4), dtype=bool)
        np.fill_diagonal(mask, False)
        i, j = self.basis.coherence_pair
        mask[i, j] = mask[j, i] = False
        return float(np.max(np.abs(self.matrix[mask])))

    @property
    def populations(self) -> np.ndarray:
        return self.matrix.diagonal().real.copy()

    @property
    def coherence(self) -> complex:
        i, j = self.basis.coherence_pair
        return complex(self.matrix[i, j])

    def in_standard_order(self) -> np.ndarray:
        """The matrix permuted to the (e1e2, e1g2, g1e2, g1g2) ordering."""
        order = np.argsort(self.basis.standard_order)
        return self.matrix[np.ix_(order, order)]


@dataclass(frozen=True)
class XEntries:
    """Entry arrays of an X-type state over a time grid."""

    basis: Basis
    kappa_t: np.ndarray
    p11: np.ndarray
    p22: np.ndarray
    p33: np.ndarray
    p44: np.ndarray
    coherence: np.ndarray

    def matrices(self) -> np.ndarray:
        """Stack of dense (T, 4, 4) matrices built from the entries."""
        t = self.kappa_t.size
        out = np.zeros((t, 4, 4), dtype=np.complex128)
        out[:, 0, 0] = self.p11
        out[:, 1, 1] = self.p22
        out[:, 2, 2] = self.p33
        out[:, 3, 3] = self.p44
        i, j = self.basis.coherence_pair
        out[:, i, j] = self.coherence
        out[:, j, i] = self.coherence.conj()
        return out

    def at(self, k: int) -> TwoQubitDensity:
        m = np.zeros((4, 4), dtype=np.complex128)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = (
            self.p11[k],
            self.p22[k],
            self.p33[k],
            self.p44[k],
        )
        i, j = self.basis.coherence_pair
        m[i, j] = self.coherence[k]
        m[j, i] = np.conj(self.coherence[k])
        return TwoQubitDensity(matrix=m, basis=self.basis)


def _weight_arrays(field: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    pairs = weights(field)
    ns = np.array([n for n, _ in pairs], dtype=np.int64)
    ws = np.array([p for _, p in pairs], dtype=np.float64)
    return ns, ws


def density_entries(
    field: FieldSpec,
    sequence: AtomSequence,
    ts: np.ndarray,
    params: ModelParams,
) -> XEntries:
    """Reduced-state entries for a whole time grid in one kernel call."""
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    ns, ws = _weight_arrays(field)
    kernel = kernels.eg_entries if sequence is AtomSequence.EG else kernels.ee_entries
    p11, p22, p33, p44, coh = kernel(
        ns, ws, ts, params.chi_over_kappa, params.r, params.stark_enabled
    )
    return XEntries(
        basis=BASIS_FOR_SEQUENCE[sequence],
        kappa_t=ts,
        p11=p11,
        p22=p22,
        p33=p33,
        p44=p44,
        coherence=coh,
    )


def rho_eg(field: FieldSpec, t: float, params: ModelParams) -> TwoQubitDensity:
    """Reduced state when the second atom enters in the ground state."""
    return density_entries(field, AtomSequence.EG, np.array([t]), params).at(0)


def rho_ee(field: FieldSpec, t: float, params: ModelParams) -> TwoQubitDensity:
    """Reduced state when the second atom enters excited."""
    return density_entries(field, AtomSequence.EE, np.array([t]), params).at(0)
