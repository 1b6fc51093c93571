"""
Dense statevector simulator.

Qubit ordering: qubit 0 is the least-significant bit of the basis index, so
amplitude ``psi[b]`` belongs to the basis state with qubit k equal to
``(b >> k) & 1``. Every module in lccvqe uses this convention.

Kernels work on arrays with an optional leading batch axis so the noisy
trajectory engine can push many trajectories through the same gate in one
call. With ``lead=1`` the array shape is (batch, 2, ..., 2).
"""
from dataclasses import dataclass
from functools import lru_cache
from math import cos, sin, sqrt
from typing import Iterable, Optional

import numpy as np

from ..errors import InvalidArgumentError
from .gates import Circuit, Gate, GateKind

MAX_DENSE_QUBITS = 20

_SQRT2_INV = 1 / sqrt(2)
_FIXED_1Q = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    GateKind.SX: 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=np.complex128),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV,
}

PAULI_X = _FIXED_1Q[GateKind.X]
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def single_qubit_matrix(gate: Gate) -> np.ndarray:
    """2x2 unitary of a single-qubit gate."""
    if gate.kind is GateKind.RY:
        c, s = cos(gate.angle / 2), sin(gate.angle / 2)
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    if gate.kind is GateKind.RZ:
        phase = np.exp(-0.5j * gate.angle)
        return np.array([[phase, 0], [0, np.conj(phase)]], dtype=np.complex128)
    try:
        return _FIXED_1Q[gate.kind]
    except KeyError:
        raise InvalidArgumentError(f"{gate.kind.value} is not a single-qubit gate") from None


def _axis(qubit: int, n: int, lead: int) -> int:
    return lead + (n - 1 - qubit)


def apply_matrix_1q(tensor: np.ndarray, matrix: np.ndarray, qubit: int, n: int, lead: int = 0) -> np.ndarray:
    """Apply a 2x2 matrix to ``qubit`` of a tensor shaped lead + (2,)*n."""
    axis = _axis(qubit, n, lead)
    out = np.tensordot(matrix, tensor, axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)


def _slice(n_axes: int, assignments) -> tuple:
    idx = [slice(None)] * n_axes
    for axis, value in assignments:
        idx[axis] = value
    return tuple(idx)


def apply_gate_tensor(tensor: np.ndarray, gate: Gate, n: int, lead: int = 0) -> np.ndarray:
    """
    Apply ``gate`` to a tensor shaped lead + (2,)*n.

    May return a new array or modify a private copy; the input is never
    modified in place.
    """
    if gate.kind.arity == 1:
        return apply_matrix_1q(tensor, single_qubit_matrix(gate), gate.qubits[0], n, lead)

    a_axis, b_axis = (_axis(q, n, lead) for q in gate.qubits)
    out = tensor.copy()
    if gate.kind is GateKind.CZ:
        out[_slice(out.ndim, [(a_axis, 1), (b_axis, 1)])] *= -1
    elif gate.kind is GateKind.CNOT:
        out[_slice(out.ndim, [(a_axis, 1), (b_axis, 0)])] = tensor[_slice(out.ndim, [(a_axis, 1), (b_axis, 1)])]
        out[_slice(out.ndim, [(a_axis, 1), (b_axis, 1)])] = tensor[_slice(out.ndim, [(a_axis, 1), (b_axis, 0)])]
    else:
        raise InvalidArgumentError(f"Unknown two-qubit gate {gate.kind.value}")
    return out


@dataclass
class StateVector:
    """A pure state on ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << self.n_qubits:
            raise InvalidArgumentError(
                f"Expected {1 << self.n_qubits} amplitudes for {self.n_qubits} qubits, got {amps.shape[0]}"
            )
        self.amplitudes = amps

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(n_qubits, amps)

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())


def _check_gate(gate: Gate, n: int) -> None:
    for q in gate.qubits:
        if not 0 <= q < n:
            raise InvalidArgumentError(f"Qubit {q} out of range for {n} qubits")


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Return the state after ``gate``; the input state is left untouched."""
    _check_gate(gate, state.n_qubits)
    n = state.n_qubits
    tensor = state.amplitudes.reshape((2,) * n) if n else state.amplitudes
    out = apply_gate_tensor(tensor, gate, n)
    return StateVector(n, out.reshape(-1))


def run_circuit(c: Circuit, initial: Optional[StateVector] = None) -> StateVector:
    """Apply every gate of ``c`` in order, starting from ``initial`` or |0...0>."""
    if initial is None:
        initial = StateVector.zero(c.n_qubits)
    elif initial.n_qubits != c.n_qubits:
        raise InvalidArgumentError(
            f"Initial state has {initial.n_qubits} qubits, circuit has {c.n_qubits}"
        )
    n = c.n_qubits
    tensor = initial.amplitudes.reshape((2,) * n) if n else initial.amplitudes.copy()
    for gate in c.gates:
        tensor = apply_gate_tensor(tensor, gate, n)
    return StateVector(n, np.ascontiguousarray(tensor).reshape(-1))


def run_circuit_batch(c: Circuit, batch: int) -> np.ndarray:
    """Run ``c`` from |0...0> for ``batch`` identical copies; shape (batch, 2^n)."""
    n = c.n_qubits
    tensor = np.zeros((batch,) + (2,) * n, dtype=np.complex128)
    tensor[(slice(None),) + (0,) * n] = 1.0
    for gate in c.gates:
        tensor = apply_gate_tensor(tensor, gate, n, lead=1)
    return tensor.reshape(batch, -1)


@lru_cache(maxsize=256)
def z_parity_signs(n: int, targets: frozenset) -> np.ndarray:
    """(-1)^(parity of the target bits) for every basis index; read-only."""
    idx = np.arange(1 << n, dtype=np.int64)
    parity = np.zeros(1 << n, dtype=np.int64)
    for t in targets:
        parity ^= (idx >> t) & 1
    signs = (1 - 2 * parity).astype(np.float64)
    signs.setflags(write=False)
    return signs


def expectation_from_probabilities(probs: np.ndarray, n: int, targets: Iterable[int]) -> np.ndarray:
    """Z-string expectation for probability vectors with shape (..., 2^n)."""
    return probs @ z_parity_signs(n, frozenset(targets))


def expectation_pauli_z(state: StateVector, targets: Iterable[int]) -> float:
    """
    Expectation of the product of Z on ``targets``.

    Raises:
        InvalidArgumentError: empty or out-of-range targets
    """
    targets = frozenset(int(t) for t in targets)
    if not targets:
        raise InvalidArgumentError("Target set must be non-empty")
    for t in targets:
        if not 0 <= t < state.n_qubits:
            raise InvalidArgumentError(f"Target qubit {t} out of range for {state.n_qubits} qubits")
    value = float(expectation_from_probabilities(state.probabilities(), state.n_qubits, targets))
    return max(-1.0, min(1.0, value))
