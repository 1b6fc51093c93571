"""
Unit tests for experiment pipelines and the equivalence check.
"""
import pytest

from src.config_schemas import EquivalenceSettings, ExperimentConfig
from src.experiments import get_pipeline, output_dir
from src.experiments.equivalence import check_equivalence, write_equivalence
from src.experiments.pipelines import (
    GW_MODE,
    NO_BACKEND,
    OPTIMUM_BRUTEFORCE,
    OPTIMUM_GW_BEST,
    OPTIMUM_SDP_BOUND,
    ModeSpec,
    resolve_optimum,
)
from src.experiments.results import FAILED_TRIAL, SCHEMA_LINE, STATUS_OK


def _cfg(experiment, **overrides):
    base = {
        "experiment": experiment,
        "trials": 2,
        "optimizer": {"max_evals": 30},
        "noise": {"backend": "backend7", "trajectories": 2, "shots": 16},
        "gw": {"trials": 4},
    }
    base.update(overrides)
    return ExperimentConfig(**base)


@pytest.mark.unit
class TestModes:
    """Tests for the modes each experiment runs."""

    def test_mode_key(self, ring6):
        assert ModeSpec("noisy-lcc", "backend7", 2).key(ring6) == (ring6.instance_id, "noisy-lcc", "backend7", 2)

    def test_lcc_vs_full_uses_both_devices(self):
        cfg = _cfg("lcc-vs-full-noisy", noise={"backend": "backend7", "full_backend": "backend27"})
        assert get_pipeline(cfg).modes() == [ModeSpec("noisy-lcc", "backend7", 1), ModeSpec("noisy-full", "backend27", 1)]

    def test_lcc_vs_full_without_second_device(self):
        modes = get_pipeline(_cfg("lcc-vs-full-noisy")).modes()
        assert {m.backend for m in modes} == {"backend7"}

    def test_same_device(self):
        modes = get_pipeline(_cfg("same-device-noisy", ansatz={"layers": 2})).modes()
        assert [(m.tag, m.backend, m.layers) for m in modes] == [
            ("noisy-lcc", "backend7", 2), ("noisy-full", "backend7", 2)]

    def test_layer_study(self):
        modes = get_pipeline(_cfg("layer-study", layers=[1, 3])).modes()
        assert [(m.tag, m.backend, m.layers) for m in modes] == [
            ("noiseless-lcc", NO_BACKEND, 1), ("noiseless-lcc", NO_BACKEND, 3)]

    def test_gw_comparison(self):
        pipeline = get_pipeline(_cfg("gw-comparison"))
        assert pipeline.needs_gw
        assert [m.tag for m in pipeline.modes()] == ["noiseless-lcc", GW_MODE]

    def test_equivalence_has_no_instance_modes(self):
        assert get_pipeline(_cfg("equivalence-check")).modes() == []

    def test_default_output_dir(self, isolated_data_dir):
        assert output_dir(_cfg("layer-study")) == isolated_data_dir / "results" / "layer-study.desk"

    def test_explicit_output_dir(self, tmp_path):
        assert output_dir(_cfg("layer-study", out=str(tmp_path))) == tmp_path


@pytest.mark.unit
class TestResolveOptimum:
    """Tests for the AR denominator."""

    def test_bruteforce_under_cap(self, ring6):
        optimum = resolve_optimum(ring6, _cfg("layer-study"))
        assert optimum.value == 6.0
        assert optimum.source == OPTIMUM_BRUTEFORCE
        assert optimum.gw is None

    def test_gw_attached_when_needed(self, ring6):
        optimum = resolve_optimum(ring6, _cfg("gw-comparison"), need_gw=True)
        assert optimum.source == OPTIMUM_BRUTEFORCE
        assert optimum.gw.best_cut <= 6
        assert len(optimum.gw.cuts) == 4

    def test_gw_best_above_cap(self, ring6):
        optimum = resolve_optimum(ring6, _cfg("layer-study", optimum={"bruteforce_cap": 4}))
        assert optimum.source == OPTIMUM_GW_BEST
        assert optimum.value == optimum.gw.best_cut
        assert optimum.value <= 6

    def test_sdp_bound_above_cap(self, ring6):
        cfg = _cfg("layer-study", optimum={"bruteforce_cap": 4, "fallback": "sdp-bound"})
        optimum = resolve_optimum(ring6, cfg)
        assert optimum.source == OPTIMUM_SDP_BOUND
        assert optimum.value == pytest.approx(6.0, abs=1e-3)


@pytest.mark.unit
class TestRunInstance:
    """Tests for per-instance execution."""

    def test_layer_study_rows(self, make_instance):
        g = make_instance(5)
        rows = get_pipeline(_cfg("layer-study", layers=[1, 2])).run_instance(g, set())
        assert len(rows) == 4
        assert [(r.layers, r.trial) for r in rows] == [(1, 0), (1, 1), (2, 0), (2, 1)]
        for r in rows:
            assert r.status == STATUS_OK
            assert r.optimum == 4.0
            assert 0.0 <= r.ar <= 1.0 + 1e-9
            assert r.ar == pytest.approx(r.expectation / 4.0)
            assert r.routing == "none"

    def test_done_modes_skipped(self, make_instance):
        g = make_instance(5)
        pipeline = get_pipeline(_cfg("layer-study", layers=[1, 2]))
        rows = pipeline.run_instance(g, {(g.instance_id, "noiseless-lcc", NO_BACKEND, 1)})
        assert {r.layers for r in rows} == {2}
        assert pipeline.run_instance(g, {m.key(g) for m in pipeline.modes()}) == []

    def test_gw_rows_one_per_hyperplane(self, ring6):
        rows = get_pipeline(_cfg("gw-comparison")).run_instance(ring6, set())
        gw_rows = [r for r in rows if r.mode == GW_MODE]
        assert len(gw_rows) == 4
        assert all(r.trial_seed is None for r in gw_rows)
        assert max(r.best_sampled_cut for r in gw_rows) == gw_rows[0].gw_best_cut

    def test_capacity_failure_becomes_status_row(self, make_instance):
        g = make_instance(8)
        rows = get_pipeline(_cfg("same-device-noisy", trials=1, optimizer={"max_evals": 5})).run_instance(g, set())
        lcc = [r for r in rows if r.mode == "noisy-lcc"]
        full = [r for r in rows if r.mode == "noisy-full"]
        assert len(lcc) == 1 and lcc[0].status == STATUS_OK
        assert lcc[0].routing == "direct"
        assert lcc[0].max_subcircuit_qubits == 4
        assert len(full) == 1
        assert full[0].trial == FAILED_TRIAL
        assert full[0].status.startswith("capacity:")


@pytest.mark.unit
class TestEquivalence:
    """Tests for the LCC versus full-state comparison."""

    def test_small_grid_passes(self):
        settings = EquivalenceSettings(n_min=4, n_max=5, layers=[1, 2], draws=3)
        report = check_equivalence(settings, seed=1)
        assert len(report.cells) == 2 * 2 * 2
        assert report.passed
        assert report.max_abs_diff <= 1e-9
        assert report.summary_line().startswith("max_abs_diff <=")

    def test_frame_columns(self):
        report = check_equivalence(EquivalenceSettings(n_min=4, n_max=4, layers=[1], entanglements=["linear"], draws=2))
        frame = report.to_frame()
        assert list(frame.columns) == ["n", "layers", "entanglement", "instance_id", "draws", "max_abs_diff"]
        assert frame.iloc[0]["entanglement"] == "linear"

    def test_inverted_range(self):
        from src.errors import InvalidArgumentError
        with pytest.raises(InvalidArgumentError):
            check_equivalence(EquivalenceSettings(n_min=6, n_max=5))

    def test_write_file(self, tmp_path):
        report = check_equivalence(EquivalenceSettings(n_min=4, n_max=4, layers=[1], draws=2))
        path = write_equivalence(report, tmp_path / "out" / "equivalence.csv")
        lines = path.read_text().splitlines()
        assert lines[0] == SCHEMA_LINE
        assert lines[1].startswith("n,layers,entanglement")
        assert len(lines) == 2 + len(report.cells)
