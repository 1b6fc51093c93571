"""Device noise tables, basis-gate transpilation and trajectory simulation."""
from .backend import BackendSpec, load_backend
from .evaluation import (
    MAX_NOISY_FULL_QUBITS,
    full_routing,
    lcc_routing,
    noisy_full_expectation,
    noisy_lcc_expectation,
)
from .placement import PLACEMENT_STRATEGIES, Placement, place
from .trajectories import NoisySimConfig, noisy_expectation, noisy_expectations
from .transpiler import BASIS_GATES, TranspiledCircuit, lower, transpile

__all__ = [
    "BackendSpec",
    "load_backend",
    "MAX_NOISY_FULL_QUBITS",
    "full_routing",
    "lcc_routing",
    "noisy_full_expectation",
    "noisy_lcc_expectation",
    "PLACEMENT_STRATEGIES",
    "Placement",
    "place",
    "NoisySimConfig",
    "noisy_expectation",
    "noisy_expectations",
    "BASIS_GATES",
    "TranspiledCircuit",
    "lower",
    "transpile",
]
