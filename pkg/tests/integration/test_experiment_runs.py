"""
Integration tests for desk-scale experiment runs.

These tests run the noiseless experiments end to end on tiny configs:
dataset selection, VQE trials, CSV writing, resume, best rows and summaries.
"""
import pytest
import yaml

from src.cli import main
from src.config_loader import load_experiment_config
from src.experiments import EquivalenceReport, read_results, run_experiment, summarize
from src.experiments.results import SCHEMA_LINE, check_ar_column

REGULAR6 = {"kind": "regular", "n": 6, "d": 3, "seeds": [0, 1]}


@pytest.fixture
def write_config(tmp_path):
    """Write an experiment YAML into tmp_path and return its path."""
    def _write(name="exp.yaml", **values):
        path = tmp_path / name
        path.write_text(yaml.safe_dump(values))
        return path
    return _write


@pytest.fixture
def layer_study_cfg(write_config, tmp_path):
    path = write_config(
        experiment="layer-study",
        seed=3,
        trials=2,
        dataset={"instances": [REGULAR6]},
        layers=[1, 2],
        optimizer={"method": "cobyla", "max_evals": 40},
        out=str(tmp_path / "layer-study"),
    )
    return load_experiment_config(path)


@pytest.mark.integration
class TestLayerStudyRun:
    """Noiseless LCC for several layer counts."""

    def test_writes_trials_and_best(self, layer_study_cfg):
        summary = run_experiment(layer_study_cfg)
        assert summary.rows_written == 2 * 2 * 2
        assert summary.failures == 0

        trials = read_results(summary.trials_path)
        assert len(trials) == 8
        assert set(trials["layers"]) == {1, 2}
        assert (trials["optimum_source"] == "bruteforce").all()
        assert check_ar_column(trials) == []
        assert (trials["ar"] <= 1.0 + 1e-9).all()
        assert summary.trials_path.read_text().splitlines()[0] == SCHEMA_LINE

        best = read_results(summary.best_path)
        assert len(best) == 4

    def test_resume_skips_completed_instances(self, layer_study_cfg):
        first = run_experiment(layer_study_cfg)
        second = run_experiment(layer_study_cfg)
        assert second.rows_written == 0
        assert second.skipped == 2
        assert len(read_results(first.trials_path)) == 8

    def test_resume_runs_only_new_layers(self, layer_study_cfg):
        run_experiment(layer_study_cfg)
        extended = layer_study_cfg.model_copy(update={"layers": [1, 2, 3]})
        summary = run_experiment(extended)
        assert summary.rows_written == 4
        assert summary.skipped == 0
        trials = read_results(summary.trials_path)
        assert sorted(trials["layers"].value_counts().to_dict().items()) == [(1, 4), (2, 4), (3, 4)]

    def test_rerun_is_reproducible(self, layer_study_cfg, tmp_path):
        a = run_experiment(layer_study_cfg, tmp_path / "a")
        b = run_experiment(layer_study_cfg, tmp_path / "b")
        ta, tb = read_results(a.trials_path), read_results(b.trials_path)
        assert list(ta["expectation"]) == list(tb["expectation"])
        assert list(ta["trial_seed"]) == list(tb["trial_seed"])

    def test_reports_threshold_percentages(self, layer_study_cfg):
        summary = run_experiment(layer_study_cfg)
        trials = read_results(summary.trials_path)
        assert sorted(summary.percentages) == [1, 2]
        for layers, pct in summary.percentages.items():
            ar = trials.loc[trials["layers"] == layers, "ar"]
            assert pct == pytest.approx(100.0 * (ar >= layer_study_cfg.threshold).mean())
        table = summarize(summary.trials_path, threshold=layer_study_cfg.threshold).table
        assert dict(zip(table["layers"], table["pct_ge_threshold"])) == pytest.approx(summary.percentages)

    def test_summary_groups_by_layers(self, layer_study_cfg):
        summary = run_experiment(layer_study_cfg)
        result = summarize(summary.trials_path)
        assert list(result.table["layers"]) == [1, 2]
        assert (result.table["instances"] == 2).all()
        assert summary.trials_path.with_name("trials.plot.csv").exists()


@pytest.mark.integration
class TestGwComparisonRun:
    def test_vqe_and_gw_rows(self, write_config, tmp_path):
        cfg = load_experiment_config(write_config(
            experiment="gw-comparison",
            trials=2,
            dataset={"instances": [{"kind": "regular", "n": 8, "d": 3, "seeds": [0]}]},
            optimizer={"max_evals": 40},
            gw={"trials": 5},
            out=str(tmp_path / "gw"),
        ))
        summary = run_experiment(cfg)
        trials = read_results(summary.trials_path)
        assert list(trials["mode"].value_counts().sort_index().items()) == [("gw", 5), ("noiseless-lcc", 2)]
        assert trials["gw_best_cut"].notna().all()
        assert trials["relaxation_value"].min() >= trials["optimum"].max() - 1e-3
        gw = trials[trials["mode"] == "gw"]
        assert gw["best_sampled_cut"].max() == gw["gw_best_cut"].iloc[0]


@pytest.mark.integration
class TestEquivalenceRun:
    def test_writes_report(self, write_config, tmp_path):
        cfg = load_experiment_config(write_config(
            experiment="equivalence-check",
            equivalence={"n_min": 4, "n_max": 6, "layers": [1, 2], "draws": 3},
        ))
        report = run_experiment(cfg, tmp_path / "eq")
        assert isinstance(report, EquivalenceReport)
        assert report.passed
        text = (tmp_path / "eq" / "equivalence.csv").read_text()
        assert text.startswith(SCHEMA_LINE)
        assert "# experiment: equivalence-check" in text


@pytest.mark.integration
class TestCommandLine:
    """The CLI verbs on the same tiny configs."""

    def test_run_then_summarize(self, write_config, tmp_path, capsys):
        path = write_config(
            experiment="layer-study",
            trials=1,
            dataset={"instances": [REGULAR6]},
            layers=[1],
            optimizer={"max_evals": 30},
        )
        out = tmp_path / "cli-run"
        assert main(["run", "--config", str(path), "--out", str(out)]) == 0
        assert (out / "trials.csv").exists()
        assert (out / "best.csv").exists()

        assert main(["summarize", str(out / "trials.csv"), "--threshold", "0.5"]) == 0
        printed = capsys.readouterr().out
        assert "noiseless-lcc" in printed

    def test_check_equivalence_verb(self, write_config, tmp_path, capsys):
        path = write_config(
            experiment="equivalence-check",
            equivalence={"n_min": 4, "n_max": 4, "layers": [1], "draws": 2},
        )
        assert main(["check-equivalence", "--config", str(path), "--out", str(tmp_path / "eq")]) == 0
        assert "max_abs_diff <=" in capsys.readouterr().out


@pytest.mark.integration
@pytest.mark.slow
class TestWorkerPool:
    def test_workers_match_in_process(self, layer_study_cfg, tmp_path):
        serial = run_experiment(layer_study_cfg, tmp_path / "serial")
        pooled = run_experiment(layer_study_cfg.model_copy(update={"workers": 2}), tmp_path / "pooled")
        a, b = read_results(serial.trials_path), read_results(pooled.trials_path)
        assert list(a["instance_id"]) == list(b["instance_id"])
        assert list(a["expectation"]) == list(b["expectation"])
