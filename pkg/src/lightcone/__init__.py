"""Light-cone cancellation: cone sets, pruned subcircuits and the cached LCC expectation."""
from .cache import LightConeCache, lcc_expectation, light_cone_cache
from .cones import LightCone, cone_sets, max_qubits, observable_cone
from .subcircuits import (
    Subcircuit,
    build_observable_subcircuits,
    build_subcircuits,
    loose_circuit,
    subcircuit_expectation,
    tighten,
)

__all__ = [
    "LightConeCache",
    "lcc_expectation",
    "light_cone_cache",
    "LightCone",
    "cone_sets",
    "max_qubits",
    "observable_cone",
    "Subcircuit",
    "build_observable_subcircuits",
    "build_subcircuits",
    "loose_circuit",
    "subcircuit_expectation",
    "tighten",
]
