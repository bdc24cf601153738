"""Single-pass closed forms for a two-photon transition in a Kerr cavity.

One excited two-level atom crossing the cavity couples Fock pairs
|n, e> <-> |n+2, g> through a degenerate two-photon exchange.  With a Kerr
medium and (optionally) dynamic Stark shifts of the two levels, each pair
evolves as an isolated 2x2 block, so the transition and survival amplitudes
have elementary closed forms.  Everything here is expressed in scaled units:
frequencies in units of the two-photon coupling kappa, times as kappa*t.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "stark_bracket",
    "upsilon",
    "lambda_phase",
    "amp_K",
    "amp_R",
    "ground_survival_phase",
]


@dataclass(frozen=True)
class ModelParams:
    """Physical configuration of the cavity-atom model.

    Attributes
    ----------
    chi_over_kappa : float
        Kerr susceptibility relative to the two-photon coupling.  Must be
        finite and non-negative.
    r : float
        Ratio of the two intermediate-level couplings.  The level shift
        rates derive from it as ``beta1 = r`` and ``beta2 = 1/r`` (units of
        kappa), so ``r`` must stay strictly positive.
    stark_enabled : bool
        When False every dynamic level-shift term is dropped, which is how
        the "no Stark shift" parameter sets are represented (a literal
        r = 0 would make the shift rates singular).
    """

    chi_over_kappa: float
    r: float = 1.0
    stark_enabled: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.chi_over_kappa) and self.chi_over_kappa >= 0.0):
            raise ValueError(
                f"chi_over_kappa must be finite and >= 0, got {self.chi_over_kappa!r}"
            )
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise ValueError(f"r must be finite and > 0, got {self.r!r}")

    @property
    def beta1(self) -> float:
        """Ground-level shift rate, in units of kappa."""
        return self.r

    @property
    def beta2(self) -> float:
        """Excited-level shift rate, in units of kappa."""
        return 1.0 / self.r


def _check_photon_index(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"photon index must be a non-negative integer, got {n!r}")
    return int(n)


def stark_bracket(n: int, params: ModelParams) -> float:
    """Detuning-like combination governing the |n,e> <-> |n+2,g> block.

    This is the half-difference of the two diagonal block energies, i.e.
    the effective two-photon detuning produced by the Kerr term and, when
    enabled, the differential Stark shift.
    """
    n = _check_photon_index(n)
    chi = params.chi_over_kappa
    out = chi * (2 * n + 1)
    if params.stark_enabled:
        r = params.r
        out += (n * (r * r - 1.0) + 2.0 * r * r) / (2.0 * r)
    return out


def upsilon(n: int, params: ModelParams) -> float:
    """Generalized two-photon Rabi frequency of the |n,e> <-> |n+2,g> block.

    Never smaller than sqrt((n+1)(n+2)) >= sqrt(2), so expressions dividing
    by it are safe everywhere.
    """
    n = _check_photon_index(n)
    b = stark_bracket(n, params)
    return math.sqrt(b * b + (n + 1) * (n + 2))


def lambda_phase(n: int, params: ModelParams) -> float:
    """Common phase rate factored out of the block evolution.

    The remaining 2x2 rotation is then described by `amp_K` and `amp_R`
    alone.  Dropped entirely from reduced density matrices except through
    differences between neighbouring blocks (see `cascade`).
    """
    n = _check_photon_index(n)
    chi = params.chi_over_kappa
    out = chi * n * (n + 1)
    if params.stark_enabled:
        r = params.r
        out += (n * (r * r + 1.0) + 2.0 * r * r) / (2.0 * r)
    return out


def amp_K(n: int, t: float, params: ModelParams) -> complex:
    """Survival amplitude of |n, e> after one transit of duration t.

    Parameters
    ----------
    n : int
        Photon number seen by the excited atom.
    t : float
        Scaled transit time kappa*t.
    params : ModelParams

    Returns
    -------
    complex
        cos(Y t) + i b sin(Y t)/Y with b = `stark_bracket` and
        Y = `upsilon`.  Satisfies |K_n|^2 + |R_{n+2}|^2 = 1.
    """
    n = _check_photon_index(n)
    b = stark_bracket(n, params)
    y = upsilon(n, params)
    return complex(math.cos(y * t), b * math.sin(y * t) / y)


def amp_R(n: int, t: float, params: ModelParams) -> complex:
    """Transition amplitude into |n, g> from |n-2, e> (two photons emitted).

    Indexed by the target photon number n.  Zero for n < 2: the block below
    the two-photon vacuum does not exist, and defining it away here lets
    cascade sums run over unrestricted indices.
    """
    n = _check_photon_index(n)
    if n < 2:
        return 0j
    m = n - 2
    y = upsilon(m, params)
    return complex(0.0, -math.sqrt(n * (n - 1)) * math.sin(y * t) / y)


def ground_survival_phase(n: int, t: float, params: ModelParams) -> complex:
    """Phase of a ground atom left alone with fewer than two photons.

    For n in {0, 1} there is no partner state to exchange with, so the
    joint state only accumulates the diagonal phase from the Kerr term and
    the ground-level shift.  Raises for n >= 2 where exchange does happen
    and `amp_K`/`amp_R` must be used instead.
    """
    n = _check_photon_index(n)
    if n >= 2:
        raise ValueError(
            f"ground survival is a bare phase only for n < 2, got n={n}"
        )
    rate = params.chi_over_kappa * n * (n - 1)
    if params.stark_enabled:
        rate += n * params.beta1
    return cmath.exp(complex(0.0, -rate * t))
