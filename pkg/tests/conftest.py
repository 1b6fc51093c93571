import pytest
import os
import sys

import numpy as np

# Add src to path to ensure imports work
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.ansatz import AnsatzSpec, Entanglement, ParameterMatrix
from src.config_loader import reload_configs
from src.problems import MaxCutInstance, gen_gnp, gen_regular
from src.seeding import numpy_rng


# =============================================================================
# Environment
# =============================================================================

@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path, monkeypatch):
    """Point LCCVQE_DATA_DIR at a per-test directory and drop cached configs."""
    monkeypatch.setenv("LCCVQE_DATA_DIR", str(tmp_path / "data"))
    reload_configs()
    yield tmp_path / "data"
    reload_configs()


@pytest.fixture
def rng():
    """Seeded numpy generator."""
    return numpy_rng(1234)


# =============================================================================
# Factory Fixtures (for building test objects concisely)
# =============================================================================

@pytest.fixture
def make_instance():
    """Factory for MaxCutInstance objects: explicit edges, or a generator row."""
    def _make(n=6, edges=None, kind=None, p=0.5, d=3, seed=0):
        if kind == "gnp":
            return gen_gnp(n, p, seed)
        if kind == "regular":
            return gen_regular(n, d, seed)
        if edges is None:
            edges = [(k, (k + 1) % n) for k in range(n)]
        return MaxCutInstance.from_edges(n, edges)
    return _make


@pytest.fixture
def make_spec():
    """Factory for AnsatzSpec objects."""
    def _make(n=6, layers=1, entanglement="circular"):
        return AnsatzSpec(n=n, layers=layers, entanglement=Entanglement(entanglement))
    return _make


@pytest.fixture
def make_theta():
    """Factory for uniformly random ParameterMatrix objects."""
    def _make(spec, seed=0):
        return ParameterMatrix.random(spec, numpy_rng(seed))
    return _make


@pytest.fixture
def ring6(make_instance):
    """6-cycle; its maximum cut is 6."""
    return make_instance(6)


@pytest.fixture
def triangle(make_instance):
    return make_instance(3, edges=[(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def zero_theta():
    def _make(spec):
        return ParameterMatrix(np.zeros(spec.shape))
    return _make


@pytest.fixture
def make_row():
    """Factory for ResultRow objects with a complete, consistent default row."""
    from src.experiments.results import ResultRow

    def _make(**overrides):
        values = dict(
            experiment="layer-study",
            instance_id="gnp-n10-p0.5-s0",
            n=10,
            num_edges=20,
            kind="gnp",
            p=0.5,
            d=None,
            seed=0,
            mode="noiseless-lcc",
            backend="none",
            layers=1,
            entanglement="circular",
            trial=0,
            trial_seed=123,
            ar=0.9,
            expectation=13.5,
            optimum=15.0,
            optimum_source="bruteforce",
            best_sampled_cut=15,
            evals=200,
            budget_exhausted=False,
            routing="none",
            max_subcircuit_qubits=5,
            wall_time=0.25,
        )
        values.update(overrides)
        return ResultRow(**values)
    return _make


@pytest.fixture
def write_trials(tmp_path):
    """Write ResultRows to a fresh trials file and return its path."""
    from src.config_schemas import ExperimentConfig
    from src.experiments.results import ResultsWriter

    def _write(rows, name="trials.csv", experiment="layer-study"):
        path = tmp_path / name
        with ResultsWriter(path, ExperimentConfig(experiment=experiment)) as writer:
            writer.write_rows(rows)
        return path
    return _write
