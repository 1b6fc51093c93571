"""
Integration tests for the noisy experiments on the bundled device tables.
"""
import numpy as np
import pytest

from src.ansatz import ParameterMatrix, full_expectation
from src.config_schemas import ExperimentConfig
from src.experiments import read_results, run_experiment, summarize
from src.noise import NoisySimConfig, load_backend, noisy_full_expectation, noisy_lcc_expectation


def _noisy_cfg(experiment, tmp_path, **noise):
    return ExperimentConfig(
        experiment=experiment,
        trials=1,
        shots=64,
        dataset={"instances": [{"kind": "regular", "n": 6, "d": 2, "seeds": [0]},
                               {"kind": "regular", "n": 8, "d": 2, "seeds": [0]}]},
        optimizer={"max_evals": 12},
        noise={"trajectories": 4, "shots": 64, **noise},
        out=str(tmp_path / experiment),
    )


@pytest.mark.integration
@pytest.mark.slow
class TestNoisyExperiments:
    """Desk-sized noisy runs."""

    def test_lcc_vs_full_on_two_devices(self, tmp_path):
        cfg = _noisy_cfg("lcc-vs-full-noisy", tmp_path, backend="backend7", full_backend="backend27")
        summary = run_experiment(cfg)
        trials = read_results(summary.trials_path)
        assert summary.failures == 0
        assert set(zip(trials["mode"], trials["backend"])) == {("noisy-lcc", "backend7"), ("noisy-full", "backend27")}
        lcc = trials[trials["mode"] == "noisy-lcc"]
        full = trials[trials["mode"] == "noisy-full"]
        assert (lcc["max_subcircuit_qubits"] <= 5).all()
        assert list(full["max_subcircuit_qubits"]) == [6, 8]
        assert trials["best_sampled_cut"].notna().all()

    def test_same_device_capacity_failure_is_recorded(self, tmp_path):
        cfg = _noisy_cfg("same-device-noisy", tmp_path, backend="backend7")
        summary = run_experiment(cfg)
        trials = read_results(summary.trials_path)
        failed = trials[trials["status"] != "ok"]
        assert summary.failures == 1
        assert list(failed["instance_id"]) == ["reg-n8-d2-s0"]
        assert failed.iloc[0]["mode"] == "noisy-full"
        assert failed.iloc[0]["trial"] == -1

        result = summarize(summary.trials_path)
        groups = dict(zip(result.table["mode"], result.table["instances"]))
        assert groups == {"noisy-full": 1, "noisy-lcc": 2}


@pytest.mark.integration
@pytest.mark.slow
class TestNoiseOrdering:
    """Accuracy of noisy LCC against the noisy full circuit at fixed angles."""

    def test_lcc_closer_to_exact_on_same_device(self, ring6, make_spec, make_theta):
        spec = make_spec(n=6, layers=1)
        backend = load_backend("backend7")
        cfg = NoisySimConfig(trajectories=512, shots=4096, seed=11)
        lcc_err, full_err = [], []
        for seed in range(8):
            theta = make_theta(spec, seed)
            exact = full_expectation(ring6, spec, theta)
            lcc_err.append(abs(noisy_lcc_expectation(ring6, spec, theta, backend, cfg) - exact))
            full_err.append(abs(noisy_full_expectation(ring6, spec, theta, backend, cfg) - exact))
        assert np.mean(lcc_err) < np.mean(full_err)

    def test_lcc_best_ar_stays_flat_over_n(self, make_instance, make_spec, make_row, write_trials):
        """Perfect-cut angles on even rings: small-device LCC keeps its AR as n grows."""
        small, large = load_backend("backend7"), load_backend("backend27")
        cfg = NoisySimConfig(trajectories=512, shots=1024, seed=5)
        rows = []
        for n in (6, 8, 10, 12):
            g = make_instance(n)
            spec = make_spec(n=n, layers=1)
            theta = ParameterMatrix.basis_encoding(spec, tuple(k % 2 for k in range(n)))
            for mode, backend, value in (
                ("noisy-lcc", small, noisy_lcc_expectation(g, spec, theta, small, cfg)),
                ("noisy-full", large, noisy_full_expectation(g, spec, theta, large, cfg)),
            ):
                rows.append(make_row(
                    experiment="lcc-vs-full-noisy", instance_id=g.instance_id, n=n, num_edges=n,
                    kind="custom", p=None, d=None, seed=None, mode=mode, backend=backend.name,
                    ar=value / n, expectation=value, optimum=float(n),
                ))
        table = summarize(write_trials(rows, experiment="lcc-vs-full-noisy")).table
        slopes = {mode: float(slope) for mode, slope in zip(table["mode"], table["slope"])}
        assert abs(slopes["noisy-lcc"]) < 0.005
        assert abs(slopes["noisy-lcc"]) <= abs(slopes["noisy-full"]) + 0.005
