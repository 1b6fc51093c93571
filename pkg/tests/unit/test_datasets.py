"""
Unit tests for dataset tables and instance selection.
"""
import pytest

from src.config_schemas import DatasetSettings, InstanceSpec
from src.errors import InvalidArgumentError
from src.experiments.datasets import build_dataset, load_instances, table_dir, table_specs
from src.problems import read_edgelist, write_edgelist


@pytest.mark.unit
class TestTables:
    """Tests for the bundled dataset tables."""

    @pytest.mark.parametrize("table,count", [
        ("noisy-tableI", 60),
        ("noiseless-tableII", 88),
        ("desk-toy16", 8),
    ])
    def test_instance_counts(self, table, count):
        instances = build_dataset(table, write=False)
        assert len(instances) == count
        assert len({g.instance_id for g in instances}) == count

    def test_noisy_table_sizes(self):
        sizes = {g.n for g in build_dataset("noisy-tableI", write=False)}
        assert min(sizes) >= 10

    def test_unknown_table(self):
        with pytest.raises(InvalidArgumentError):
            table_specs("tableIX")

    def test_generation_is_reproducible(self):
        a = build_dataset("desk-toy16", write=False)
        b = build_dataset("desk-toy16", write=False)
        assert a == b


@pytest.mark.unit
class TestBuildDataset:
    """Tests for writing edge-list files."""

    def test_writes_one_file_per_instance(self, isolated_data_dir):
        instances = build_dataset("desk-toy16")
        directory = isolated_data_dir / "desk-toy16"
        files = sorted(directory.glob("*.edges"))
        assert len(files) == len(instances)
        for g in instances:
            assert read_edgelist(directory / f"{g.instance_id}.edges") == g

    def test_custom_rows(self, tmp_path):
        specs = [InstanceSpec(kind="gnp", n=8, p=0.4, seeds=[0, 1])]
        instances = build_dataset("custom", specs=specs, root=tmp_path)
        assert [g.instance_id for g in instances] == ["gnp-n8-p0.4-s0", "gnp-n8-p0.4-s1"]
        assert (table_dir("custom", tmp_path) / "gnp-n8-p0.4-s1.edges").exists()


@pytest.mark.unit
class TestLoadInstances:
    """Tests for experiment dataset sections."""

    def test_table_with_n_window(self):
        instances = load_instances(DatasetSettings(table="noisy-tableI", n_min=10, n_max=12))
        assert instances
        assert all(10 <= g.n <= 12 for g in instances)

    def test_existing_files_take_precedence(self, isolated_data_dir, make_instance):
        instances = build_dataset("desk-toy16")
        replaced = make_instance(16, edges=[(0, 1)])
        write_edgelist(replaced, isolated_data_dir / "desk-toy16" / f"{instances[0].instance_id}.edges")
        loaded = load_instances(DatasetSettings(table="desk-toy16"))
        assert loaded[0].edges == ((0, 1),)
        assert loaded[1] == instances[1]

    def test_inline_rows_and_paths(self, tmp_path, make_instance):
        path = write_edgelist(make_instance(5), tmp_path / "ring5.edges")
        settings = DatasetSettings(
            instances=[InstanceSpec(kind="regular", n=6, d=3, seeds=[2])],
            paths=[str(path)],
        )
        instances = load_instances(settings)
        assert [g.n for g in instances] == [6, 5]
        assert instances[0].instance_id == "reg-n6-d3-s2"

    def test_limit(self):
        assert len(load_instances(DatasetSettings(table="noiseless-tableII", limit=3))) == 3

    def test_missing_path(self, tmp_path):
        with pytest.raises(InvalidArgumentError):
            load_instances(DatasetSettings(paths=[str(tmp_path / "missing.edges")]))

    def test_empty_selection(self):
        with pytest.raises(InvalidArgumentError):
            load_instances(DatasetSettings(table="desk-toy16", n_max=5))
