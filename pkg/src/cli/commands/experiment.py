"""Experiment CLI commands: run and check-equivalence."""
from src.config_schemas import EXPERIMENT_TAGS
from src.errors import InternalConsistencyError
from src.experiments import EquivalenceReport, run_experiment

from ..utils import add_common_flags, config_from_args

EQUIVALENCE = "equivalence-check"


def register_commands(parent_subparsers):
    """Register the 'run' and 'check-equivalence' verbs."""
    parser_run = parent_subparsers.add_parser(
        "run",
        help="Run an experiment",
        description="Run an experiment from its bundled preset or a config file; results go to trials.csv and best.csv."
    )
    parser_run.add_argument("experiment", nargs="?", choices=EXPERIMENT_TAGS,
                            help="Experiment tag (optional with --config)")
    add_common_flags(parser_run)
    parser_run.set_defaults(func=handle_run)

    parser_eq = parent_subparsers.add_parser(
        "check-equivalence",
        help="Compare LCC and full-state expectations",
        description="Evaluate LCC and full-state expectations on random angles and report the largest difference."
    )
    add_common_flags(parser_eq)
    parser_eq.set_defaults(func=handle_check_equivalence)


def _report_equivalence(report: EquivalenceReport) -> None:
    print(report.to_frame().to_string(index=False, float_format=lambda v: f"{v:.3e}"))
    print(report.summary_line())
    if not report.passed:
        raise InternalConsistencyError(f"LCC and full-state expectations disagree: {report.summary_line()}")


def handle_run(args):
    """Handle 'run' command."""
    if args.experiment is None and not args.config:
        print("Error: give an experiment tag or --config")
        return 2
    cfg = config_from_args(args, args.experiment)
    print(f"Running {cfg.experiment} ({cfg.scale})...")
    result = run_experiment(cfg)
    if isinstance(result, EquivalenceReport):
        _report_equivalence(result)
        return 0

    print(f"Rows written: {result.rows_written}  failures: {result.failures}  resumed instances: {result.skipped}")
    print(f"Trials: {result.trials_path}")
    print(f"Best:   {result.best_path}")


def handle_check_equivalence(args):
    """Handle 'check-equivalence' command."""
    cfg = config_from_args(args, EQUIVALENCE)
    if cfg.experiment != EQUIVALENCE:
        cfg = cfg.model_copy(update={"experiment": EQUIVALENCE})
    _report_equivalence(run_experiment(cfg))
