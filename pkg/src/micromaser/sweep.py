"""Time sweeps of the two-atom entanglement over the scaled interaction time.

A sweep evaluates the reduced two-atom state on a uniform grid of scaled
times for one field/sequence/parameter combination and derives concurrence,
the middle-level population sum, and the entanglement of formation at every
point.  Results serialize to CSV with a fixed 12-significant-digit format so
repeated runs of the same configuration are byte-identical, and optionally
to a two-curve vector plot.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from .cascade import AtomSequence
from .concurrence import concurrence_from_entries, entanglement_of_formation
from .density import Basis, XEntries, density_entries
from .fields import DEFAULT_TAIL_EPS, FieldSpec
from .model import ModelParams

__all__ = ["RunConfig", "SweepResult", "run_sweep"]

# CSV schema: the first four columns are always present, the matrix block is
# appended when dump_matrix is set.  Entries are indexed in the sweep's own
# basis ordering, so exactly one coherence column pair is nonzero.
BASE_COLUMNS = ("kappa_t", "concurrence", "pop_sum", "ent_formation")
MATRIX_COLUMNS = (
    "rho11",
    "rho22",
    "rho33",
    "rho44",
    "rho14_re",
    "rho14_im",
    "rho23_re",
    "rho23_im",
)

_CONFIG_KEYS = (
    "field",
    "atoms",
    "chi_over_kappa",
    "r",
    "stark",
    "t_start",
    "t_end",
    "steps",
    "csv_path",
    "plot_path",
    "dump_matrix",
    "tail_eps",
)


def _parse_stark(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        word = value.strip().lower()
        if word in ("on", "true", "1", "yes"):
            return True
        if word in ("off", "false", "0", "no"):
            return False
    raise ValueError(f"stark must be on/off or a boolean, got {value!r}")


@dataclass(frozen=True)
class RunConfig:
    """One sweep configuration: physics inputs plus output destinations."""

    field: FieldSpec
    atoms: AtomSequence
    chi_over_kappa: float = 0.0
    r: float = 1.0
    stark: bool = False
    t_start: float = 0.0
    t_end: float = 10.0
    steps: int = 1000
    csv_path: str | None = None
    plot_path: str | None = None
    dump_matrix: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.field, FieldSpec):
            raise ValueError("field must be a FieldSpec")
        if not isinstance(self.atoms, AtomSequence):
            raise ValueError("atoms must be an AtomSequence")
        if not isinstance(self.steps, int) or isinstance(self.steps, bool):
            raise ValueError("steps must be an integer")
        if self.steps < 2:
            raise ValueError(f"steps must be at least 2, got {self.steps}")
        t0, t1 = float(self.t_start), float(self.t_end)
        if not (math.isfinite(t0) and math.isfinite(t1)):
            raise ValueError("time range must be finite")
        if t0 < 0.0:
            raise ValueError(f"t_start must be non-negative, got {t0}")
        if t1 <= t0:
            raise ValueError(f"t_end must exceed t_start, got [{t0}, {t1}]")
        # constructing the parameter set runs its own validation
        self.model_params()

    def model_params(self) -> ModelParams:
        return ModelParams(
            chi_over_kappa=float(self.chi_over_kappa),
            r=float(self.r),
            stark_enabled=bool(self.stark),
        )

    def times(self) -> np.ndarray:
        return np.linspace(float(self.t_start), float(self.t_end), self.steps)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "RunConfig":
        """Build a config from flat string-keyed values (JSON document or
        merged CLI flags).  Unknown keys are rejected."""
        unknown = sorted(set(mapping) - set(_CONFIG_KEYS))
        if unknown:
            raise ValueError(f"unknown configuration keys: {', '.join(unknown)}")
        if "field" not in mapping or "atoms" not in mapping:
            raise ValueError("configuration requires both 'field' and 'atoms'")

        field = mapping["field"]
        if isinstance(field, str):
            field = FieldSpec.parse(field)
        tail = mapping.get("tail_eps")
        if tail is not None:
            field = dataclasses.replace(field, tail_eps=float(tail))

        atoms = mapping["atoms"]
        if isinstance(atoms, str):
            atoms = AtomSequence.parse(atoms)

        kwargs: dict[str, Any] = {"field": field, "atoms": atoms}
        for key in ("chi_over_kappa", "r", "t_start", "t_end"):
            if key in mapping:
                kwargs[key] = float(mapping[key])
        if "stark" in mapping:
            kwargs["stark"] = _parse_stark(mapping["stark"])
        if "steps" in mapping:
            steps = mapping["steps"]
            if isinstance(steps, float) and not steps.is_integer():
                raise ValueError(f"steps must be an integer, got {steps}")
            kwargs["steps"] = int(steps)
        for key in ("csv_path", "plot_path"):
            if mapping.get(key) is not None:
                kwargs[key] = str(mapping[key])
        if "dump_matrix" in mapping:
            kwargs["dump_matrix"] = _parse_stark(mapping["dump_matrix"])
        return cls(**kwargs)

    @classmethod
    def from_json(cls, path: str, overrides: Mapping[str, Any] | None = None) -> "RunConfig":
        """Load a flat JSON document; explicit overrides win over file values."""
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"{path}: configuration document must be a JSON object")
        if overrides:
            data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_mapping(data)

    def describe(self) -> str:
        stark = "on" if self.stark else "off"
        return (
            f"{self.field.label()} {self.atoms.value} chi={self.chi_over_kappa:g} "
            f"r={self.r:g} stark={stark} t=[{self.t_start:g},{self.t_end:g}]x{self.steps}"
        )


@dataclass(frozen=True)
class SweepResult:
    """Per-time-point derived quantities for one sweep."""

    config: RunConfig
    entries: XEntries
    concurrence: np.ndarray
    pop_sum: np.ndarray
    ent_formation: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.entries.kappa_t)
        for name in ("concurrence", "pop_sum", "ent_formation"):
            arr = getattr(self, name)
            if arr.shape != (n,):
                raise ValueError(f"{name} must have one row per time point")
        if np.any(self.concurrence < 0.0) or np.any(self.concurrence > 1.0):
            raise ValueError("concurrence left [0, 1]")

    @property
    def kappa_t(self) -> np.ndarray:
        return self.entries.kappa_t

    def max_concurrence(self) -> tuple[float, float]:
        """(max C, the scaled time where it is attained)."""
        k = int(np.argmax(self.concurrence))
        return float(self.concurrence[k]), float(self.entries.kappa_t[k])

    def columns(self) -> tuple[str, ...]:
        if self.config.dump_matrix:
            return BASE_COLUMNS + MATRIX_COLUMNS
        return BASE_COLUMNS

    def rows(self) -> np.ndarray:
        """Float matrix with one row per time point, in column order."""
        cols = [self.entries.kappa_t, self.concurrence, self.pop_sum, self.ent_formation]
        if self.config.dump_matrix:
            e = self.entries
            zero = np.zeros_like(e.p11)
            if e.basis is Basis.EG:
                rho14_re, rho14_im = e.coherence.real, e.coherence.imag
                rho23_re, rho23_im = zero, zero
            else:
                rho14_re, rho14_im = zero, zero
                rho23_re, rho23_im = e.coherence.real, e.coherence.imag
            cols += [e.p11, e.p22, e.p33, e.p44, rho14_re, rho14_im, rho23_re, rho23_im]
        return np.column_stack(cols)

    def to_csv_text(self) -> str:
        lines = [",".join(self.columns())]
        for row in self.rows():
            lines.append(",".join("%.12g" % v for v in row))
        return "\n".join(lines) + "\n"

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv_text())

    def write_plot(self, path: str) -> None:
        """Two-curve vector plot: concurrence solid, population sum dotted."""
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        t = self.entries.kappa_t
        ax.plot(t, self.concurrence, "-", color="tab:blue", label="concurrence")
        ax.plot(t, self.pop_sum, ":", color="tab:red", label="population sum")
        ax.set_xlabel("scaled time")
        ax.set_ylabel("concurrence / population")
        ax.set_xlim(t[0], t[-1])
        ax.set_ylim(bottom=0.0)
        ax.legend(loc="upper right", frameon=False)
        ax.set_title(self.config.describe(), fontsize=9)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def run_sweep(config: RunConfig) -> SweepResult:
    """Evaluate the configured sweep and write any requested output files."""
    params = config.model_params()
    entries = density_entries(config.field, config.atoms, config.times(), params)
    conc = concurrence_from_entries(
        entries.p11, entries.p22, entries.p33, entries.p44, entries.coherence, entries.basis
    )
    # clip eigensolver-level noise so the [0, 1] invariant is exact
    conc = np.clip(conc, 0.0, 1.0)
    pop = entries.p22 + entries.p33
    eof = entanglement_of_formation(conc)
    result = SweepResult(
        config=config,
        entries=entries,
        concurrence=conc,
        pop_sum=pop,
        ent_formation=eof,
    )
    if config.csv_path:
        result.write_csv(config.csv_path)
    if config.plot_path:
        result.write_plot(config.plot_path)
    return result
