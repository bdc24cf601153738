import numpy as np
import pytest

import micromaser.kernels as kernels
from micromaser.cli import main
from micromaser.verify import format_report, verification_grid, verify


def test_quick_report_structure():
    report = verify("quick")
    assert report["passed"] is True
    assert report["depth"] == "quick"
    assert report["points"] == 24
    names = {c["name"] for c in report["checks"]}
    assert {
        "oracle_equivalence:rho_eg",
        "oracle_equivalence:rho_ee",
        "oracle_equivalence:concurrence",
        "invariants:concurrence_closed_vs_general",
        "invariants:hermiticity",
        "invariants:trace",
        "invariants:positivity",
        "invariants:unitarity",
    } <= names
    for check in report["checks"]:
        assert check["worst"] <= check["tolerance"]

    text = format_report(report)
    assert "result: PASS" in text
    assert text.count("PASS") >= len(report["checks"])


def test_grid_sizes():
    assert len(list(verification_grid("quick"))) == 24
    assert len(list(verification_grid("full"))) == 720
    with pytest.raises(ValueError):
        list(verification_grid("medium"))


def test_corrupted_kernel_is_caught(monkeypatch):
    true_eg = kernels.eg_entries

    def corrupted(ns, ws, ts, chi, r, stark):
        p11, p22, p33, p44, coh = true_eg(ns, ws, ts, chi, r, stark)
        return p11 + 1e-5, p22, p33, p44, coh

    monkeypatch.setattr(kernels, "eg_entries", corrupted)
    report = verify("quick")
    assert report["passed"] is False
    failed = [c["name"] for c in report["checks"] if not c["passed"]]
    assert any("rho_eg" in name for name in failed)
    assert "FAIL" in format_report(report)


def test_corrupted_kernel_exit_code(monkeypatch, capsys):
    true_ee = kernels.ee_entries

    def corrupted(ns, ws, ts, chi, r, stark):
        p11, p22, p33, p44, coh = true_ee(ns, ws, ts, chi, r, stark)
        return p11, p22, p33, p44, coh * np.exp(0.001j)

    monkeypatch.setattr(kernels, "ee_entries", corrupted)
    assert main(["verify", "--depth", "quick"]) == 2
    out = capsys.readouterr().out
    assert "result: FAIL" in out
    assert "rho_ee" in out


def test_depth_validation():
    with pytest.raises(ValueError):
        verify("exhaustive")
