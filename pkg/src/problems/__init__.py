"""Max-Cut problem instances: representation, generation, and exact solution."""
from .graph import (
    Assignment,
    GraphMeta,
    MaxCutInstance,
    complement,
    cut_value,
    max_cut_bruteforce,
    BRUTEFORCE_HARD_CAP,
)
from .generators import gen_gnp, gen_regular
from .edgelist import read_edgelist, write_edgelist

__all__ = [
    "Assignment",
    "GraphMeta",
    "MaxCutInstance",
    "complement",
    "cut_value",
    "max_cut_bruteforce",
    "BRUTEFORCE_HARD_CAP",
    "gen_gnp",
    "gen_regular",
    "read_edgelist",
    "write_edgelist",
]
