"""
Dataset construction.

A dataset table is a list of generator rows (kind, n, p or d, seed list) kept in
config/datasets.yaml. ``build_dataset`` materializes a table into edge-list
files under ``<data_dir>/<table>/``; those files are the canonical dataset and
experiments read them back when present.
"""
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..config_loader import data_dir, get_datasets
from ..config_schemas import DatasetSettings, InstanceSpec
from ..errors import InvalidArgumentError
from ..logging_config import get_logger
from ..problems import MaxCutInstance, gen_gnp, gen_regular, read_edgelist, write_edgelist

logger = get_logger(__name__)

CUSTOM_TABLE = "custom"


def instances_from_spec(spec: InstanceSpec) -> List[MaxCutInstance]:
    """One instance per seed of a generator row."""
    if spec.kind == "gnp":
        return [gen_gnp(spec.n, spec.p, seed) for seed in spec.seeds]
    return [gen_regular(spec.n, spec.d, seed) for seed in spec.seeds]


def table_specs(table: str) -> List[InstanceSpec]:
    tables = get_datasets().tables
    if table not in tables:
        raise InvalidArgumentError(f"Unknown dataset table '{table}', expected one of {sorted(tables)}")
    return list(tables[table].rows)


def table_dir(table: str, root: Optional[Path] = None) -> Path:
    return Path(root or data_dir()) / table


def build_dataset(table: str, specs: Optional[Iterable[InstanceSpec]] = None,
                  root: Optional[Union[str, Path]] = None, write: bool = True) -> List[MaxCutInstance]:
    """
    Materialize a dataset table.

    Args:
        table: name in config/datasets.yaml, or any name when ``specs`` is given
        specs: inline generator rows; overrides the table lookup
        root: data directory, default LCCVQE_DATA_DIR
        write: write ``<root>/<table>/<instance_id>.edges`` files

    Raises:
        RetryExhaustedError: an infeasible or unlucky regular row
    """
    rows = list(specs) if specs is not None else table_specs(table)
    instances: List[MaxCutInstance] = []
    for spec in rows:
        instances.extend(instances_from_spec(spec))
    if write:
        out = table_dir(table, Path(root) if root else None)
        for g in instances:
            write_edgelist(g, out / f"{g.instance_id}.edges")
        logger.info(f"Wrote {len(instances)} instances to {out}", extra={"experiment": table})
    return instances


def _table_instances(table: str, root: Optional[Path]) -> List[MaxCutInstance]:
    """Instances of a table, read from its edge-list files when they exist."""
    instances = []
    directory = table_dir(table, root)
    for spec in table_specs(table):
        for g in instances_from_spec(spec):
            path = directory / f"{g.instance_id}.edges"
            instances.append(read_edgelist(path) if path.exists() else g)
    return instances


def load_instances(settings: DatasetSettings, root: Optional[Union[str, Path]] = None) -> List[MaxCutInstance]:
    """
    Instances selected by an experiment's dataset section, in table order,
    then inline rows, then explicit files; filtered by n range and truncated to
    ``limit``.
    """
    root_path = Path(root) if root else None
    instances: List[MaxCutInstance] = []
    if settings.table:
        instances.extend(_table_instances(settings.table, root_path))
    for spec in settings.instances:
        instances.extend(instances_from_spec(spec))
    for path in settings.paths:
        if not Path(path).exists():
            raise InvalidArgumentError(f"Instance file not found: {path}")
        instances.append(read_edgelist(path))
    if settings.n_min is not None:
        instances = [g for g in instances if g.n >= settings.n_min]
    if settings.n_max is not None:
        instances = [g for g in instances if g.n <= settings.n_max]
    if settings.limit is not None:
        instances = instances[:settings.limit]
    if not instances:
        raise InvalidArgumentError("The dataset section selects no instances")
    return instances
