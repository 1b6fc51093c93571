"""Dataset CLI commands."""
from pathlib import Path

from src.config_schemas import InstanceSpec
from src.experiments import build_dataset
from src.experiments.datasets import CUSTOM_TABLE, table_dir


def register_commands(parent_subparsers):
    """Register the 'gen' verb."""
    parser = parent_subparsers.add_parser(
        "gen",
        help="Write a dataset table as edge-list files",
        description="Generate the instances of a dataset table and write one edge-list file per instance."
    )
    parser.add_argument("table", help="Table name from config/datasets.yaml, or 'custom'")
    parser.add_argument("--out", help="Data directory (default: $LCCVQE_DATA_DIR)")
    parser.add_argument("--kind", choices=["gnp", "regular"], help="Generator for 'custom'")
    parser.add_argument("--n", type=int, help="Vertex count for 'custom'")
    parser.add_argument("--p", type=float, help="Edge probability for 'custom' gnp")
    parser.add_argument("--d", type=int, help="Degree for 'custom' regular")
    parser.add_argument("--seeds", type=int, nargs="+", default=[0], help="Generator seeds for 'custom'")
    parser.set_defaults(func=handle_gen)


def handle_gen(args):
    """Handle 'gen' command."""
    specs = None
    if args.table == CUSTOM_TABLE:
        if args.kind is None or args.n is None:
            print("Error: 'gen custom' needs --kind and --n")
            return 2
        specs = [InstanceSpec(kind=args.kind, n=args.n, p=args.p, d=args.d, seeds=args.seeds)]

    instances = build_dataset(args.table, specs=specs, root=args.out)
    print(f"Wrote {len(instances)} instances to {table_dir(args.table, Path(args.out) if args.out else None)}")
    print(f"{'Instance':<28} | {'n':>4} | {'m':>5}")
    print("-" * 44)
    for g in instances:
        print(f"{g.instance_id:<28} | {g.n:>4} | {g.num_edges:>5}")
