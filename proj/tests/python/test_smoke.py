import json
import math

import numpy as np
import pytest

import tidisc


def entropy_bits(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum())


def reduced(rho, keep):
    r = rho.reshape(2, 2, 2, 2)
    return np.einsum("ijkj->ik", r) if keep == "A" else np.einsum("ijil->jl", r)


def test_bell_state_triple():
    rho = tidisc.bell_diagonal_state(1.0, -1.0, 1.0)
    t = tidisc.correlations(rho)
    assert t.mutual_info == pytest.approx(2.0, abs=1e-9)
    assert t.classical == pytest.approx(1.0, abs=1e-9)
    assert t.discord == pytest.approx(1.0, abs=1e-9)


def test_family_discord_matches_numpy_oracle():
    m = 0.1
    rho = tidisc.bell_diagonal_state(1.0, m, -m)
    assert np.allclose(rho, rho.conj().T)
    mi = entropy_bits(reduced(rho, "A")) + entropy_bits(reduced(rho, "B")) - entropy_bits(rho)
    assert tidisc.mutual_information(rho) == pytest.approx(mi, abs=1e-12)
    expected = sum((1 + s * m) / 2 * math.log2(1 + s * m) for s in (1, -1))
    assert tidisc.correlations(rho).discord == pytest.approx(expected, abs=1e-9)
    assert tidisc.correlations_bruteforce(rho, 16).discord == pytest.approx(expected, abs=1e-6)


def test_partial_trace_agrees_with_einsum():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    for keep in ("A", "B"):
        assert np.allclose(tidisc.partial_trace(rho, keep), reduced(rho, keep), atol=1e-14)


def test_map_matches_master_equation():
    res = tidisc.LorentzianReservoir.from_ratio(0.05, 3.0, 0.5)
    deph = tidisc.OhmicDephasing(alpha=0.05, s=2.5, temperature="high", scale=2.0)
    rho = np.array([[0.6, 0.2 - 0.1j], [0.2 + 0.1j, 0.4]])
    me = tidisc.map_elements(2.0, res, deph, omega=0.7)
    mapped = tidisc.apply_map(me, rho)
    solved = tidisc.master_equation_oracle(rho, 2.0, res, deph, omega=0.7)
    assert np.abs(mapped - solved).max() < 1e-6


def test_dephasing_transition_and_classification():
    deph = tidisc.OhmicDephasing(alpha=0.01, s=2.5, temperature="high", scale=100.0)
    search = tidisc.dephasing_transition_time(0.1, deph)
    assert search["status"] == "found"
    gz = tidisc.big_gamma_z(search["time"], deph)
    assert math.exp(-2.0 * gz) == pytest.approx(0.1, abs=1e-8)

    assert tidisc.classify_dephasing(3.5, 0.1)["kind"] == "time-invariant"
    assert tidisc.classify_dephasing(2.5, 0.1)["kind"] == "frozen"


def test_trace_returns_arrays():
    deph = tidisc.OhmicDephasing(alpha=0.01, s=2.5, temperature="high", scale=100.0)
    ch = tidisc.ChannelStack(deph=deph)
    out = tidisc.correlation_trace(0.1, np.linspace(0.0, 12.0, 121), ch)
    assert out["D"].shape == (121,)
    assert np.allclose(out["I"] - out["C"], out["D"], atol=1e-12)
    assert 0.0 < out["transition_time"] < 12.0


def test_correlated_transition_order():
    times = []
    for r in (0.0, 0.5, 1.0):
        cfg = tidisc.CorrelatedEnvConfig(r=r, c=0.1, s=1.0, alpha1=0.2, alpha2=0.2)
        result = tidisc.correlated_transition_time(cfg, 40.0)
        assert result["status"] == "found"
        times.append(result["time"])
    assert times[2] < times[1] < times[0]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        tidisc.bell_diagonal_state(2.0, 2.0, 2.0)
    with pytest.raises(tidisc.InvalidInput):
        tidisc.dephasing_transition_time(1.5, tidisc.OhmicDephasing())
    with pytest.raises(ValueError):
        tidisc.OhmicDephasing(temperature="lukewarm")


def test_cli_entry_point():
    code, out, err = tidisc.run_cli(["transition", "--model", "dephasing", "--s", "3.5", "--m", "0.1"])
    assert code == 0, err
    assert json.loads(out)["transition_time"] == "time-invariant"

    code, _, err = tidisc.run_cli(["transition", "--m", "1.5"])
    assert code == 2
    assert "m must lie in (0,1)" in err
