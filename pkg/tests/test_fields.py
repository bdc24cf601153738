import math

import numpy as np
import pytest

from micromaser.fields import DEFAULT_TAIL_EPS, FieldSpec, truncation_for, weights


def test_fock_basics():
    f = FieldSpec.fock(2)
    assert truncation_for(f) == 2
    assert weights(f) == [(2, 1.0)]
    assert f.label() == "fock:2"


def test_thermal_truncation_frozen():
    assert truncation_for(FieldSpec.thermal(0.5)) == 20
    assert truncation_for(FieldSpec.thermal(2.0)) == 56


def test_truncation_is_tightest(rng):
    for _ in range(200):
        nbar = float(rng.uniform(0.01, 5.0))
        eps = float(10.0 ** rng.uniform(-14.0, -4.0))
        f = FieldSpec.thermal(nbar, tail_eps=eps)
        n = truncation_for(f)
        q = nbar / (1.0 + nbar)
        assert q ** (n + 1) < eps
        if n > 0:
            assert q**n >= eps


def test_weights_mass_and_mean(rng):
    for _ in range(100):
        nbar = float(rng.uniform(0.05, 4.0))
        f = FieldSpec.thermal(nbar)
        pairs = weights(f)
        ns = np.array([n for n, _ in pairs], dtype=float)
        ws = np.array([w for _, w in pairs])
        assert np.all(ws > 0.0)
        assert -1e-15 <= 1.0 - ws.sum() < DEFAULT_TAIL_EPS
        # the discarded geometric tail has mass q^(N+1) and carries mean
        # q^(N+1) * (N + 1 + nbar); leave room for summation rounding
        n_top = ns[-1]
        tail = (nbar / (1.0 + nbar)) ** (n_top + 1.0)
        mean_gap = abs(nbar - float(ns @ ws))
        bound = tail * (n_top + 1.0 + nbar)
        assert mean_gap <= bound + 1e-12


def test_zero_temperature_limit():
    f = FieldSpec.thermal(0.0)
    assert truncation_for(f) == 0
    assert weights(f) == [(0, 1.0)]


def test_explicit_n_max_wins():
    f = FieldSpec.thermal(2.0, n_max=10)
    assert truncation_for(f) == 10
    assert len(weights(f)) == 11


def test_parse():
    assert FieldSpec.parse("fock:3") == FieldSpec.fock(3)
    assert FieldSpec.parse(" thermal:0.5 ") == FieldSpec.thermal(0.5)
    for bad in ("fock", "fock:1.5", "coherent:2", "thermal:abc", "fock:-1"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_validation():
    with pytest.raises(ValueError):
        FieldSpec("squeezed", 1.0)
    with pytest.raises(ValueError):
        FieldSpec.fock(-1)
    with pytest.raises(ValueError):
        FieldSpec.thermal(-0.5)
    with pytest.raises(ValueError):
        FieldSpec.thermal(1.0, tail_eps=0.0)
    with pytest.raises(ValueError):
        FieldSpec.thermal(1.0, n_max=-2)
