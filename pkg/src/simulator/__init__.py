"""Gate model and dense statevector simulation."""
from .gates import Circuit, Gate, GateKind, ParamCoord, cnot, cz, h, rz, ry, sx, x
from .statevector import (
    MAX_DENSE_QUBITS,
    StateVector,
    apply_gate,
    expectation_from_probabilities,
    expectation_pauli_z,
    run_circuit,
    run_circuit_batch,
)

__all__ = [
    "Circuit",
    "Gate",
    "GateKind",
    "ParamCoord",
    "cnot",
    "cz",
    "h",
    "rz",
    "ry",
    "sx",
    "x",
    "MAX_DENSE_QUBITS",
    "StateVector",
    "apply_gate",
    "expectation_from_probabilities",
    "expectation_pauli_z",
    "run_circuit",
    "run_circuit_batch",
]
