import json

import numpy as np
import pytest

from micromaser.cascade import AtomSequence
from micromaser.fields import FieldSpec
from micromaser.sweep import BASE_COLUMNS, MATRIX_COLUMNS, RunConfig, run_sweep


def _vacuum_config(**kwargs):
    return RunConfig(field=FieldSpec.fock(0), atoms=AtomSequence.EG, **kwargs)


def test_config_validation():
    _vacuum_config()
    with pytest.raises(ValueError):
        _vacuum_config(steps=1)
    with pytest.raises(ValueError):
        _vacuum_config(t_start=5.0, t_end=5.0)
    with pytest.raises(ValueError):
        _vacuum_config(t_start=-1.0)
    with pytest.raises(ValueError):
        _vacuum_config(r=0.0)
    with pytest.raises(ValueError):
        RunConfig(field="fock:0", atoms=AtomSequence.EG)
    with pytest.raises(ValueError):
        _vacuum_config(steps=2.5)


def test_from_mapping():
    cfg = RunConfig.from_mapping(
        {
            "field": "thermal:0.5",
            "atoms": "ee",
            "chi_over_kappa": 0.5,
            "r": 0.3,
            "stark": "on",
            "steps": 50,
            "t_end": 5.0,
        }
    )
    assert cfg.field == FieldSpec.thermal(0.5)
    assert cfg.atoms is AtomSequence.EE
    assert cfg.stark is True
    assert cfg.steps == 50
    with pytest.raises(ValueError, match="unknown"):
        RunConfig.from_mapping({"field": "fock:0", "atoms": "eg", "nope": 1})
    with pytest.raises(ValueError, match="field"):
        RunConfig.from_mapping({"atoms": "eg"})
    with pytest.raises(ValueError):
        RunConfig.from_mapping({"field": "fock:0", "atoms": "eg", "stark": "maybe"})
    with pytest.raises(ValueError):
        RunConfig.from_mapping({"field": "fock:0", "atoms": "eg", "steps": 10.5})


def test_tail_eps_key_reaches_field():
    cfg = RunConfig.from_mapping({"field": "thermal:2.0", "atoms": "eg", "tail_eps": 1e-6})
    assert cfg.field.tail_eps == 1e-6


def test_from_json_with_overrides(tmp_path):
    doc = {"field": "fock:2", "atoms": "ee", "chi_over_kappa": 0.5, "steps": 40}
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(doc))
    cfg = RunConfig.from_json(str(path))
    assert cfg.chi_over_kappa == 0.5
    cfg = RunConfig.from_json(str(path), overrides={"chi_over_kappa": 1.5, "steps": None})
    assert cfg.chi_over_kappa == 1.5
    assert cfg.steps == 40

    path.write_text("[1, 2]")
    with pytest.raises(ValueError, match="JSON object"):
        RunConfig.from_json(str(path))


def test_run_sweep_basic():
    result = run_sweep(_vacuum_config())
    assert result.kappa_t.shape == (1000,)
    assert result.concurrence[0] == 0.0
    assert np.all((result.concurrence >= 0.0) & (result.concurrence <= 1.0))
    peak, at = result.max_concurrence()
    assert peak == pytest.approx(0.769787, abs=1e-5)
    assert 0.0 <= at <= 10.0
    assert np.max(result.pop_sum) == pytest.approx(0.25, abs=1e-3)


def test_csv_deterministic_and_parsable(tmp_path):
    cfg = _vacuum_config(steps=64, dump_matrix=False)
    text_a = run_sweep(cfg).to_csv_text()
    text_b = run_sweep(cfg).to_csv_text()
    assert text_a == text_b
    assert text_a.splitlines()[0] == ",".join(BASE_COLUMNS)

    path = tmp_path / "out.csv"
    result = run_sweep(
        RunConfig(
            field=FieldSpec.fock(0),
            atoms=AtomSequence.EG,
            steps=64,
            csv_path=str(path),
        )
    )
    data = np.genfromtxt(path, delimiter=",", names=True)
    assert data.shape == (64,)
    assert np.allclose(data["concurrence"], result.concurrence, atol=1e-11)
    assert np.allclose(data["kappa_t"], result.kappa_t, atol=1e-11)


def test_dump_matrix_columns():
    cfg = RunConfig(
        field=FieldSpec.thermal(0.5),
        atoms=AtomSequence.EG,
        chi_over_kappa=0.5,
        steps=16,
        dump_matrix=True,
    )
    result = run_sweep(cfg)
    assert result.columns() == BASE_COLUMNS + MATRIX_COLUMNS
    rows = result.rows()
    assert rows.shape == (16, 12)
    header = result.to_csv_text().splitlines()[0]
    assert header.count(",") == 11
    # eg sweeps populate the outer coherence columns only
    rho14 = rows[:, 8] + 1j * rows[:, 9]
    assert np.allclose(rho14, result.entries.coherence, atol=1e-14)
    assert np.all(rows[:, 10] == 0.0)
    assert np.all(rows[:, 11] == 0.0)
    trace = rows[:, 4] + rows[:, 5] + rows[:, 6] + rows[:, 7]
    assert np.max(np.abs(trace - 1.0)) < 1e-9

    ee = run_sweep(
        RunConfig(field=FieldSpec.fock(1), atoms=AtomSequence.EE, steps=8, dump_matrix=True)
    )
    rows = ee.rows()
    assert np.all(rows[:, 8] == 0.0)
    assert np.all(rows[:, 9] == 0.0)
    assert np.allclose(rows[:, 10] + 1j * rows[:, 11], ee.entries.coherence, atol=1e-14)


def test_output_files(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    plot_path = tmp_path / "sweep.svg"
    cfg = RunConfig(
        field=FieldSpec.fock(0),
        atoms=AtomSequence.EE,
        steps=32,
        csv_path=str(csv_path),
        plot_path=str(plot_path),
    )
    run_sweep(cfg)
    assert csv_path.exists()
    assert plot_path.read_text().lstrip().startswith("<?xml")


def test_describe():
    cfg = RunConfig(
        field=FieldSpec.thermal(2.0),
        atoms=AtomSequence.EE,
        chi_over_kappa=0.5,
        r=0.3,
        stark=True,
        steps=100,
    )
    text = cfg.describe()
    assert "thermal:2" in text
    assert "ee" in text
    assert "stark=on" in text
