"""Self-verification suites: closed-form pipeline against the brute-force oracle.

The quick suite samples a couple dozen (field, parameter, sequence, time)
points; the full suite covers the whole release grid of several hundred
points plus cutoff-robustness deltas.  Every check reports its worst-case
deviation next to its tolerance in a machine-readable report.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cascade import AtomSequence
from .concurrence import concurrence_closed, concurrence_from_entries, concurrence_general
from .density import HERMITICITY_TOL, PSD_TOL, TRACE_TOL, density_entries
from .fields import FieldSpec, truncation_for
from .model import ModelParams, amp_K, amp_R
from .oracle import sequential_pass

__all__ = ["verify", "format_report", "GridPoint", "verification_grid"]

RHO_TOL = 1.0e-8
CONCURRENCE_TOL = 1.0e-8
CLOSED_VS_GENERAL_TOL = 1.0e-10
UNITARITY_TOL = 1.0e-12
CUTOFF_TOL = 1.0e-9

_TIMES = (0.9, 3.7)
_QUICK_FIELDS = ("fock:0", "fock:2", "thermal:0.5")
_QUICK_PARAMS = ((0.0, 1.0, False), (1.0, 0.5, True))
_FULL_FIELDS = ("fock:0", "fock:1", "fock:2", "fock:5", "thermal:0.5", "thermal:2.0")
_FULL_CHI = (0.0, 0.2, 0.5, 1.0, 2.0)
_FULL_R = (0.001, 0.1, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class GridPoint:
    field: FieldSpec
    params: ModelParams
    sequence: AtomSequence
    t: float

    def label(self) -> str:
        stark = "on" if self.params.stark_enabled else "off"
        return (
            f"{self.field.label()} {self.sequence.value} chi={self.params.chi_over_kappa:g} "
            f"r={self.params.r:g} stark={stark} t={self.t:g}"
        )


def _full_params() -> list[ModelParams]:
    out = []
    for chi in _FULL_CHI:
        out.append(ModelParams(chi, 1.0, False))
        for r in _FULL_R:
            out.append(ModelParams(chi, r, True))
    return out


def verification_grid(depth: str = "quick") -> Iterator[GridPoint]:
    """The (field, params, sequence, time) sample points for a depth."""
    if depth == "quick":
        fields = _QUICK_FIELDS
        params = [ModelParams(c, r, s) for c, r, s in _QUICK_PARAMS]
    elif depth == "full":
        fields = _FULL_FIELDS
        params = _full_params()
    else:
        raise ValueError(f"depth must be 'quick' or 'full', got {depth!r}")
    for name in fields:
        field = FieldSpec.parse(name)
        for p in params:
            for seq in (AtomSequence.EG, AtomSequence.EE):
                for t in _TIMES:
                    yield GridPoint(field, p, seq, t)


def _check(name, worst, tol, points, detail=""):
    return {
        "name": name,
        "passed": bool(worst <= tol),
        "worst": float(worst),
        "tolerance": float(tol),
        "points": int(points),
        "detail": detail,
    }


def _oracle_checks(grid: list[GridPoint]) -> list[dict]:
    worst_rho = {AtomSequence.EG: 0.0, AtomSequence.EE: 0.0}
    worst_at = {AtomSequence.EG: "", AtomSequence.EE: ""}
    counts = {AtomSequence.EG: 0, AtomSequence.EE: 0}
    worst_c, worst_c_at = 0.0, ""
    worst_cg, worst_cg_at = 0.0, ""
    worst_herm = worst_trace = worst_neg = 0.0

    for gp in grid:
        entries = density_entries(gp.field, gp.sequence, np.array([gp.t]), gp.params)
        analytic = entries.at(0)
        oracle = sequential_pass(gp.field, gp.sequence, gp.t, gp.params)

        dev = float(np.max(np.abs(analytic.matrix - oracle.matrix)))
        counts[gp.sequence] += 1
        if dev > worst_rho[gp.sequence]:
            worst_rho[gp.sequence] = dev
            worst_at[gp.sequence] = gp.label()

        # a state broken enough to fail its own validation counts as an
        # unbounded deviation rather than aborting the report
        label = gp.label()
        try:
            c_closed = concurrence_closed(analytic).concurrence
            dc = abs(c_closed - concurrence_general(oracle).concurrence)
            dg = abs(c_closed - concurrence_general(analytic).concurrence)
        except ValueError as exc:
            dc = dg = float("inf")
            label = f"{label} ({exc})"
        if dc > worst_c:
            worst_c, worst_c_at = dc, label
        if dg > worst_cg:
            worst_cg, worst_cg_at = dg, label

        m = analytic.matrix
        worst_herm = max(worst_herm, float(np.max(np.abs(m - m.conj().T))))
        worst_trace = max(worst_trace, abs(float(np.trace(m).real) - 1.0))
        worst_neg = max(worst_neg, max(0.0, -float(np.linalg.eigvalsh(m)[0])))

    return [
        _check(
            "oracle_equivalence:rho_eg",
            worst_rho[AtomSequence.EG],
            RHO_TOL,
            counts[AtomSequence.EG],
            worst_at[AtomSequence.EG],
        ),
        _check(
            "oracle_equivalence:rho_ee",
            worst_rho[AtomSequence.EE],
            RHO_TOL,
            counts[AtomSequence.EE],
            worst_at[AtomSequence.EE],
        ),
        _check(
            "oracle_equivalence:concurrence",
            worst_c,
            CONCURRENCE_TOL,
            len(grid),
            worst_c_at,
        ),
        _check(
            "invariants:concurrence_closed_vs_general",
            worst_cg,
            CLOSED_VS_GENERAL_TOL,
            len(grid),
            worst_cg_at,
        ),
        _check("invariants:hermiticity", worst_herm, HERMITICITY_TOL, len(grid)),
        _check("invariants:trace", worst_trace, TRACE_TOL, len(grid)),
        _check("invariants:positivity", worst_neg, -PSD_TOL, len(grid)),
    ]


def _unitarity_check(draws: int) -> dict:
    rng = np.random.default_rng(20240617)
    worst = 0.0
    for _ in range(draws):
        n = int(rng.integers(0, 61))
        params = ModelParams(
            chi_over_kappa=float(rng.uniform(0.0, 3.0)),
            r=float(rng.uniform(0.001, 3.0)),
            stark_enabled=bool(rng.integers(0, 2)),
        )
        t = float(rng.uniform(0.0, 20.0))
        total = abs(amp_K(n, t, params)) ** 2 + abs(amp_R(n + 2, t, params)) ** 2
        worst = max(worst, abs(total - 1.0))
    return _check("invariants:unitarity", worst, UNITARITY_TOL, draws)


def _cutoff_check(grid: list[GridPoint]) -> dict:
    worst, worst_at = 0.0, ""
    seen: set[tuple] = set()
    for gp in grid:
        key = (gp.field, gp.params, gp.sequence)
        if key in seen:
            continue
        seen.add(key)
        raised = dataclasses.replace(gp.field, n_max=truncation_for(gp.field) + 4)
        ts = np.array(_TIMES)
        for field in (gp.field,):
            base = density_entries(field, gp.sequence, ts, gp.params)
            more = density_entries(raised, gp.sequence, ts, gp.params)
            c0 = concurrence_from_entries(
                base.p11, base.p22, base.p33, base.p44, base.coherence, base.basis
            )
            c1 = concurrence_from_entries(
                more.p11, more.p22, more.p33, more.p44, more.coherence, more.basis
            )
            dev = float(np.max(np.abs(c0 - c1)))
            if dev > worst:
                worst, worst_at = dev, gp.label()
    return _check("robustness:cutoff", worst, CUTOFF_TOL, 2 * len(seen), worst_at)


def verify(depth: str = "quick") -> dict:
    """Run the suite at the given depth and return the report."""
    started = time.perf_counter()
    grid = list(verification_grid(depth))
    checks = _oracle_checks(grid)
    checks.append(_unitarity_check(200 if depth == "quick" else 1000))
    if depth == "full":
        checks.append(_cutoff_check(grid))
    return {
        "depth": depth,
        "passed": all(c["passed"] for c in checks),
        "points": len(grid),
        "elapsed_s": round(time.perf_counter() - started, 3),
        "checks": checks,
    }


def format_report(report: dict) -> str:
    lines = [
        f"verification depth={report['depth']} points={report['points']} "
        f"elapsed={report['elapsed_s']}s"
    ]
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        line = (
            f"  {status} {c['name']}: worst {c['worst']:.3e} "
            f"(tolerance {c['tolerance']:.0e}, {c['points']} points)"
        )
        if not c["passed"] and c["detail"]:
            line += f" at {c['detail']}"
        lines.append(line)
    lines.append("result: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines)
