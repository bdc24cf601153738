"""Entanglement of two successive atoms crossing a two-photon Kerr cavity."""

from .model import (
    ModelParams,
    amp_K,
    amp_R,
    ground_survival_phase,
    lambda_phase,
    stark_bracket,
    upsilon,
)
from .cascade import (
    AtomSequence,
    JointAmplitudes,
    joint_amplitudes,
    phase_factor_eg,
    phase_factor_ee,
)
from .fields import FieldSpec, truncation_for, weights
from .density import Basis, TwoQubitDensity, XEntries, density_entries, rho_eg, rho_ee
from .concurrence import (
    ConcurrenceResult,
    concurrence_closed,
    concurrence_from_entries,
    concurrence_general,
    entanglement_of_formation,
    population_sum,
)
from .oracle import TruncatedHilbert, build_h_int, sequential_pass
from .sweep import RunConfig, SweepResult, run_sweep
from .figures import FIGURE_IDS, figure_preset, preset_table
from .verify import format_report, verify

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "stark_bracket",
    "upsilon",
    "lambda_phase",
    "amp_K",
    "amp_R",
    "ground_survival_phase",
    "AtomSequence",
    "JointAmplitudes",
    "joint_amplitudes",
    "phase_factor_eg",
    "phase_factor_ee",
    "FieldSpec",
    "truncation_for",
    "weights",
    "Basis",
    "TwoQubitDensity",
    "XEntries",
    "density_entries",
    "rho_eg",
    "rho_ee",
    "ConcurrenceResult",
    "concurrence_closed",
    "concurrence_general",
    "concurrence_from_entries",
    "entanglement_of_formation",
    "population_sum",
    "TruncatedHilbert",
    "build_h_int",
    "sequential_pass",
    "RunConfig",
    "SweepResult",
    "run_sweep",
    "FIGURE_IDS",
    "figure_preset",
    "preset_table",
    "format_report",
    "verify",
    "__version__",
]
