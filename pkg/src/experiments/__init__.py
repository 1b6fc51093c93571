"""Experiment harness: datasets, pipelines, result files and summaries."""
from pathlib import Path
from typing import Optional, Union

from ..config_schemas import ExperimentConfig
from ..logging_config import get_logger
from .datasets import build_dataset, load_instances
from .equivalence import EquivalenceReport, check_equivalence, write_equivalence
from .pipelines import PIPELINE_CLASSES, RunSummary, get_pipeline, output_dir
from .results import ResultRow, config_header, read_results
from .summary import Summary, summarize

logger = get_logger(__name__)


def run_experiment(cfg: ExperimentConfig, out: Optional[Union[str, Path]] = None) -> Union[RunSummary, EquivalenceReport]:
    """
    Run the experiment named by ``cfg.experiment`` and write its CSV files
    under ``out`` (default: ``cfg.out`` or ``<data_dir>/results/<experiment>.<scale>``).
    """
    out_path = Path(out) if out else output_dir(cfg)
    logger.info(f"Starting {cfg.experiment} ({cfg.scale}) into {out_path}", extra={"experiment": cfg.experiment})
    if cfg.experiment == "equivalence-check":
        report = check_equivalence(cfg.equivalence, cfg.seed)
        write_equivalence(report, out_path / "equivalence.csv", config_header(cfg))
        return report
    return get_pipeline(cfg).run(load_instances(cfg.dataset), out_path)


__all__ = [
    "build_dataset",
    "load_instances",
    "EquivalenceReport",
    "check_equivalence",
    "write_equivalence",
    "PIPELINE_CLASSES",
    "RunSummary",
    "get_pipeline",
    "output_dir",
    "ResultRow",
    "read_results",
    "Summary",
    "summarize",
    "run_experiment",
]
