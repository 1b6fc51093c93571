"""Shared utilities for CLI commands."""
import sys
from typing import Any, Callable, Dict, Optional

from src.config_loader import load_experiment_config
from src.config_schemas import ExperimentConfig
from src.errors import LccError
from src.logging_config import get_logger

logger = get_logger(__name__)


def add_common_flags(parser, config: bool = True) -> None:
    """Flags shared by the experiment verbs."""
    if config:
        parser.add_argument("--config", help="Experiment YAML file (overrides the bundled preset)")
        parser.add_argument("--scale", default="desk", help="Bundled preset scale: desk or full (default: desk)")
    parser.add_argument("--seed", type=int, help="Root seed")
    parser.add_argument("--workers", type=int, help="Worker processes (default: 1, in-process)")
    parser.add_argument("--out", help="Output directory (default: $LCCVQE_DATA_DIR/results/<experiment>.<scale>)")


def config_from_args(args, experiment: Optional[str] = None) -> ExperimentConfig:
    """
    Resolve the experiment config from ``--config`` or the bundled preset and
    apply the command-line overrides.
    """
    overrides: Dict[str, Any] = {
        "seed": getattr(args, "seed", None),
        "workers": getattr(args, "workers", None),
        "out": getattr(args, "out", None),
    }
    cfg = load_experiment_config(
        path=getattr(args, "config", None),
        experiment=experiment,
        scale=getattr(args, "scale", "desk"),
        overrides=overrides,
    )
    if getattr(args, "config", None) and experiment and cfg.experiment != experiment:
        logger.warning(f"--config names experiment '{cfg.experiment}', ignoring '{experiment}'")
    return cfg


def run_handler(func: Callable, args) -> int:
    """
    Call a verb handler and translate errors into exit codes.

    Handlers return an exit code (None means 0). An ``LccError`` exits with its
    category code; anything else exits 1.
    """
    try:
        code = func(args)
    except LccError as e:
        print(f"Error [{e.category}]: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 1
    return code or 0


def print_custom_help():
    """Print detailed usage guide."""
    help_text = """
lccvqe CLI - Usage Guide
================================

COMMAND STRUCTURE:
  lccvqe <verb> [options]

DATASET COMMANDS:
  gen <table> [--out <dir>]
      Write every instance of a table in config/datasets.yaml as
      <dir>/<table>/<instance_id>.edges (default dir: $LCCVQE_DATA_DIR).
      Tables: noisy-tableI (60 instances), noiseless-tableII (88), desk-toy16 (8)

  gen custom --kind gnp --n 10 --p 0.5 --seeds 0 1
      Write ad-hoc generator rows.

EXPERIMENT COMMANDS:
  run <experiment> [--config <yaml>] [--scale desk|full] [--seed N] [--workers N] [--out <dir>]
      Experiments: lcc-vs-full-noisy, same-device-noisy, layer-study,
                   gw-comparison, equivalence-check
      Writes trials.csv (one row per trial) and best.csv (best trial per
      instance and mode). Re-running with the same output directory resumes.

  check-equivalence [--config <yaml>] [--scale desk|full] [--seed N] [--out <dir>]
      LCC vs full-state expectations on random angles; exit code 9 when the
      maximum difference exceeds the tolerance.

SUMMARY COMMANDS:
  summarize <trials.csv> [--plot-out <csv>] [--threshold 0.99]
      Per (mode, backend, layers): count, mean, median, quartiles, range,
      share of trials >= threshold and slope of best AR over n.

EXIT CODES:
  0 ok, 1 unexpected, 2 invalid argument, 3 size limit, 4 retry exhausted,
  5 unsupported, 6 capacity, 7 parse error, 8 contract violation,
  9 internal consistency

ENVIRONMENT:
  LCCVQE_DATA_DIR  dataset and results directory (default ./data)
  CONFIG_DIR       configuration directory (default: bundled config/)
  LOG_LEVEL        DEBUG, INFO, WARNING, ERROR (default INFO)
  LOG_FORMAT       json or text (default json)
"""
    print(help_text)
