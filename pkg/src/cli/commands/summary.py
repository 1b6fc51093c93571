"""Summary CLI commands."""
from src.experiments import summarize


def register_commands(parent_subparsers):
    """Register the 'summarize' verb."""
    parser = parent_subparsers.add_parser(
        "summarize",
        help="Summarize a trials file",
        description="Print per-group statistics of the best AR per instance and write a plot-data CSV."
    )
    parser.add_argument("csv", help="trials.csv written by 'run'")
    parser.add_argument("--plot-out", help="Plot-data CSV (default: <csv stem>.plot.csv)")
    parser.add_argument("--threshold", type=float, default=0.99, help="AR threshold for the success share")
    parser.set_defaults(func=handle_summarize)


def handle_summarize(args):
    """Handle 'summarize' command."""
    result = summarize(args.csv, args.plot_out, args.threshold)
    print(result.format_table())
    if not result.plot_data.empty:
        print()
        print(result.plot_data.to_string(index=False, float_format=lambda v: f"{v:.4f}"))
