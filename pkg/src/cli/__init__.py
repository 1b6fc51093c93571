"""
lccvqe CLI - Command Line Interface

Builds the bundled datasets, runs experiments, checks LCC against the full
state vector, and summarizes result files.

Command structure: lccvqe <verb> [options]
Verbs: gen, run, check-equivalence, summarize
"""
import sys
import os
import argparse

# Ensure root is in path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from dotenv import load_dotenv

from .commands import dataset, experiment, summary
from .utils import print_custom_help, run_handler


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lccvqe",
        description="lccvqe - Max-Cut VQE with light-cone cancellation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Verbs:
  gen                Write a dataset table as edge-list files
  run                Run an experiment and write trials.csv and best.csv
  check-equivalence  Compare LCC and full-state expectations on random angles
  summarize          Print group statistics of a trials file and write plot data

Examples:
  lccvqe gen noisy-tableI
  lccvqe run same-device-noisy --scale desk --workers 4
  lccvqe run --config my-experiment.yaml --seed 7 --out results/
  lccvqe check-equivalence --scale full
  lccvqe summarize data/results/layer-study.desk/trials.csv
"""
    )
    subparsers = parser.add_subparsers(dest="verb", help="Verb to run")

    # Register verbs from each module
    dataset.register_commands(subparsers)
    experiment.register_commands(subparsers)
    summary.register_commands(subparsers)

    # Help command
    subparsers.add_parser("help", help="Show detailed usage guide")
    return parser


def main(argv=None) -> int:
    """Parse ``argv`` and run the selected verb; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verb == "help":
        print_custom_help()
        return 0
    if hasattr(args, "func"):
        return run_handler(args.func, args)
    parser.print_help()
    return 0


def run():
    """Main entry point for the CLI."""
    load_dotenv()
    sys.exit(main())


if __name__ == "__main__":
    run()
