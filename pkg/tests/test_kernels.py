import numpy as np
import pytest

from micromaser import kernels
from micromaser.cascade import joint_amplitudes, phase_factor_ee, phase_factor_eg
from micromaser.kernels import _ref

from conftest import random_params

try:
    from micromaser.kernels import _fast
except ImportError:
    _fast = None


def test_backend_name():
    assert kernels.backend_name() in ("compiled", "python")
    if _fast is not None:
        assert kernels.backend_name() == "compiled"


def _random_workload(rng):
    nn = int(rng.integers(1, 30))
    ns = np.sort(rng.choice(70, size=nn, replace=False)).astype(np.int64)
    ws = rng.random(nn)
    ts = rng.random(40) * 12.0
    p = random_params(rng)
    return ns, ws, ts, p.chi_over_kappa, p.r, p.stark_enabled


@pytest.mark.skipif(_fast is None, reason="compiled backend not built")
def test_backends_agree(rng):
    for _ in range(25):
        ns, ws, ts, chi, r, stark = _random_workload(rng)
        for fast_fn, ref_fn in (
            (_fast.eg_entries, _ref.eg_entries),
            (_fast.ee_entries, _ref.ee_entries),
        ):
            got = fast_fn(ns, ws, ts, chi, r, stark)
            want = ref_fn(ns, ws, ts, chi, r, stark)
            for g, w in zip(got, want):
                scale = max(1.0, float(np.max(np.abs(w))))
                assert np.max(np.abs(np.asarray(g) - np.asarray(w))) <= 1e-13 * scale


def _scalar_eg(ns, ws, ts, chi, r, stark):
    from micromaser.model import ModelParams

    p = ModelParams(chi_over_kappa=chi, r=r, stark_enabled=stark)
    out = np.zeros((5, ts.size), dtype=np.complex128)
    for n, w in zip(ns, ws):
        for j, t in enumerate(ts):
            a = joint_amplitudes(int(n), float(t), p)
            out[0, j] += w * abs(a.eg_eg) ** 2
            out[1, j] += w * abs(a.eg_ee) ** 2
            out[2, j] += w * abs(a.eg_gg) ** 2
            out[3, j] += w * abs(a.eg_ge) ** 2
            out[4, j] += w * phase_factor_eg(int(n), float(t), p) * a.eg_eg * np.conj(a.eg_ge)
    return out


def _scalar_ee(ns, ws, ts, chi, r, stark):
    from micromaser.model import ModelParams

    p = ModelParams(chi_over_kappa=chi, r=r, stark_enabled=stark)
    out = np.zeros((5, ts.size), dtype=np.complex128)
    for n, w in zip(ns, ws):
        for j, t in enumerate(ts):
            a = joint_amplitudes(int(n), float(t), p)
            out[0, j] += w * abs(a.ee_ee) ** 2
            out[1, j] += w * abs(a.ee_eg) ** 2
            out[2, j] += w * abs(a.ee_ge) ** 2
            out[3, j] += w * abs(a.ee_gg) ** 2
            out[4, j] += w * phase_factor_ee(int(n), float(t), p) * a.ee_eg * np.conj(a.ee_ge)
    return out


def test_kernels_match_scalar_construction(rng):
    for _ in range(5):
        ns = np.array(sorted(rng.choice(12, size=4, replace=False)), dtype=np.int64)
        ws = rng.random(4)
        ts = rng.random(7) * 9.0
        p = random_params(rng)
        chi, r, stark = p.chi_over_kappa, p.r, p.stark_enabled

        got = kernels.eg_entries(ns, ws, ts, chi, r, stark)
        want = _scalar_eg(ns, ws, ts, chi, r, stark)
        for k in range(4):
            assert np.max(np.abs(got[k] - want[k].real)) < 1e-12
        assert np.max(np.abs(got[4] - want[4])) < 1e-12

        got = kernels.ee_entries(ns, ws, ts, chi, r, stark)
        want = _scalar_ee(ns, ws, ts, chi, r, stark)
        for k in range(4):
            assert np.max(np.abs(got[k] - want[k].real)) < 1e-12
        assert np.max(np.abs(got[4] - want[4])) < 1e-12


def test_kernel_input_validation():
    backends = [_ref] if _fast is None else [_ref, _fast]
    for mod in backends:
        for fn in (mod.eg_entries, mod.ee_entries):
            with pytest.raises(ValueError):
                fn(np.array([-1]), np.array([1.0]), np.array([0.5]), 0.0, 1.0, False)
            with pytest.raises(ValueError):
                fn(np.array([0, 1]), np.array([1.0]), np.array([0.5]), 0.0, 1.0, False)


def test_zero_time_point():
    ns = np.array([0, 3], dtype=np.int64)
    ws = np.array([0.5, 0.5])
    ts = np.array([0.0])
    p11, p22, p33, p44, coh = kernels.eg_entries(ns, ws, ts, 0.3, 0.7, True)
    assert p11[0] == pytest.approx(1.0, abs=1e-14)
    assert p22[0] == p33[0] == p44[0] == 0.0
    assert coh[0] == pytest.approx(0.0, abs=1e-14)
