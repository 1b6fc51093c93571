"""
Lowering to the device basis {X, SX, Rz, CNOT}.

    Ry(t)    -> Rz(-pi), SX, Rz(pi - t), SX, Rz(0)        (application order)
    H        -> Rz(pi/2), SX, Rz(pi/2)
    CZ(a, b) -> H(b), CNOT(a, b), H(b)

Each rewrite holds up to a global phase. The result keeps logical qubit labels;
the placement maps them to physical qubits, which decide the error of every
gate. Rz is virtual and error-free.
"""
import math
from dataclasses import dataclass
from typing import List, Tuple

from ..errors import CapacityError, ContractViolationError
from ..logging_config import get_logger
from ..simulator import Circuit, Gate, GateKind, cnot, rz, sx
from .backend import BackendSpec
from .placement import ROUTING_FALLBACK, Placement, place

logger = get_logger(__name__)

BASIS_GATES = frozenset({GateKind.X, GateKind.SX, GateKind.RZ, GateKind.CNOT})


@dataclass(frozen=True)
class TranspiledCircuit:
    """A basis-gate circuit on logical qubits with its device bookkeeping."""

    circuit: Circuit
    errors: Tuple[float, ...]  # one depolarizing probability per gate
    readout_errors: Tuple[float, ...]  # per logical qubit
    placement: Placement
    backend_name: str

    @property
    def n_qubits(self) -> int:
        return self.circuit.n_qubits

    @property
    def routing(self) -> str:
        return self.placement.routing

    @property
    def layout(self) -> Tuple[int, ...]:
        return self.placement.layout


def _hadamard(q: int) -> List[Gate]:
    return [rz(q, math.pi / 2), sx(q), rz(q, math.pi / 2)]


def lower_gate(gate: Gate) -> List[Gate]:
    """Basis-gate sequence equivalent to ``gate`` up to global phase."""
    q = gate.qubits[0]
    if gate.kind in BASIS_GATES:
        return [gate]
    if gate.kind is GateKind.RY:
        return [rz(q, -math.pi), sx(q), rz(q, math.pi - gate.angle), sx(q), rz(q, 0.0)]
    if gate.kind is GateKind.H:
        return _hadamard(q)
    if gate.kind is GateKind.CZ:
        a, b = gate.qubits
        return _hadamard(b) + [cnot(a, b)] + _hadamard(b)
    raise ContractViolationError(f"No basis lowering for {gate.kind.value}")


def lower(c: Circuit) -> Circuit:
    gates: List[Gate] = []
    for g in c.gates:
        gates.extend(lower_gate(g))
    return Circuit(c.n_qubits, tuple(gates))


def gate_error(gate: Gate, physical: Tuple[int, ...], backend: BackendSpec) -> float:
    if gate.kind is GateKind.RZ:
        return 0.0
    if gate.kind in (GateKind.X, GateKind.SX):
        return backend.sq_error[physical[gate.qubits[0]]]
    if gate.kind is GateKind.CNOT:
        a, b = (physical[q] for q in gate.qubits)
        if backend.has_coupling(a, b):
            return backend.cnot_error_for(a, b)
        return backend.mean_cnot_error
    raise ContractViolationError(f"{gate.kind.value} is not a basis gate")


def transpile(c: Circuit, backend: BackendSpec, placement: str = "first-path") -> TranspiledCircuit:
    """
    Lower ``c`` to basis gates, place it on ``backend`` and attach gate errors.

    Raises:
        CapacityError: circuit wider than the device
    """
    if c.n_qubits > backend.n_qubits:
        raise CapacityError(f"Circuit needs {c.n_qubits} qubits but {backend.name} has {backend.n_qubits}")
    pairs = tuple(sorted({tuple(sorted(p)) for p in c.two_qubit_pairs()}))
    chosen = place(c.n_qubits, pairs, backend, placement)
    lowered = lower(c)
    errors = tuple(gate_error(g, chosen.layout, backend) for g in lowered.gates)
    readout = tuple(backend.readout_error[p] for p in chosen.layout)
    if chosen.routing == ROUTING_FALLBACK:
        logger.debug(
            f"Transpiled {c.n_qubits}-qubit circuit with mean-error fallback on {backend.name}",
            extra={"backend": backend.name},
        )
    return TranspiledCircuit(
        circuit=lowered,
        errors=errors,
        readout_errors=readout,
        placement=chosen,
        backend_name=backend.name,
    )
