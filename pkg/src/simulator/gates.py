"""
Gate and circuit representation.

A circuit is an ordered tuple of gates; the first gate is applied first.
Rotation gates may carry a ``param_coord`` (k, m) pointing into the parameter
matrix, which lets pruned circuits be re-bound to new angles without being
rebuilt.
"""
import enum
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, Optional, Set, Tuple

import numpy as np

from ..errors import InternalConsistencyError, InvalidArgumentError

ParamCoord = Tuple[int, int]


class GateKind(enum.Enum):
    RY = "Ry"
    RZ = "Rz"
    X = "X"
    SX = "SqrtX"
    H = "H"
    CZ = "CZ"
    CNOT = "CNOT"

    @property
    def arity(self) -> int:
        return 2 if self in (GateKind.CZ, GateKind.CNOT) else 1

    @property
    def is_rotation(self) -> bool:
        return self in (GateKind.RY, GateKind.RZ)


@dataclass(frozen=True)
class Gate:
    """
    A single gate.

    For CNOT, ``qubits`` is (control, target). CZ is symmetric.
    """

    kind: GateKind
    qubits: Tuple[int, ...]
    angle: Optional[float] = None
    param_coord: Optional[ParamCoord] = None

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        if len(qubits) != self.kind.arity:
            raise InvalidArgumentError(f"{self.kind.value} acts on {self.kind.arity} qubit(s), got {qubits}")
        if len(set(qubits)) != len(qubits):
            raise InvalidArgumentError(f"{self.kind.value} qubits must be distinct, got {qubits}")
        if any(q < 0 for q in qubits):
            raise InvalidArgumentError(f"Negative qubit index in {qubits}")
        if self.kind.is_rotation and self.angle is None:
            raise InvalidArgumentError(f"{self.kind.value} requires an angle")
        if not self.kind.is_rotation and self.angle is not None:
            raise InvalidArgumentError(f"{self.kind.value} takes no angle")
        if self.param_coord is not None and not self.kind.is_rotation:
            raise InvalidArgumentError(f"{self.kind.value} cannot carry a parameter coordinate")
        object.__setattr__(self, "qubits", qubits)
        if self.angle is not None:
            object.__setattr__(self, "angle", float(self.angle))

    def inverse(self) -> Tuple["Gate", ...]:
        """Gates whose product is the adjoint of this gate (up to global phase)."""
        if self.kind.is_rotation:
            return (Gate(self.kind, self.qubits, -self.angle),)
        if self.kind is GateKind.SX:
            # SX^-1 = SX^3 = X SX
            return (Gate(GateKind.X, self.qubits), Gate(GateKind.SX, self.qubits))
        return (self,)

    def relabel(self, mapping: Dict[int, int]) -> "Gate":
        return replace(self, qubits=tuple(mapping[q] for q in self.qubits))

    def with_angle(self, angle: float) -> "Gate":
        return replace(self, angle=angle)

    def __str__(self) -> str:
        qubits = ",".join(str(q) for q in self.qubits)
        text = f"{self.kind.value}({qubits})"
        if self.angle is not None:
            text += f" angle={self.angle:.12g}"
        if self.param_coord is not None:
            text += f" theta[{self.param_coord[0]},{self.param_coord[1]}]"
        return text


def ry(qubit: int, angle: float = 0.0, coord: Optional[ParamCoord] = None) -> Gate:
    return Gate(GateKind.RY, (qubit,), angle, coord)


def rz(qubit: int, angle: float) -> Gate:
    return Gate(GateKind.RZ, (qubit,), angle)


def x(qubit: int) -> Gate:
    return Gate(GateKind.X, (qubit,))


def sx(qubit: int) -> Gate:
    return Gate(GateKind.SX, (qubit,))


def h(qubit: int) -> Gate:
    return Gate(GateKind.H, (qubit,))


def cz(a: int, b: int) -> Gate:
    return Gate(GateKind.CZ, (a, b))


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: Tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        gates = tuple(self.gates)
        for g in gates:
            if any(q >= self.n_qubits for q in g.qubits):
                raise InvalidArgumentError(
                    f"Gate {g} out of range for a {self.n_qubits}-qubit circuit"
                )
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)

    def param_coords(self) -> Set[ParamCoord]:
        return {g.param_coord for g in self.gates if g.param_coord is not None}

    def two_qubit_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(g.qubits for g in self.gates if g.kind.arity == 2)

    def bind(self, theta: np.ndarray) -> "Circuit":
        """
        Resolve every parameter coordinate against ``theta``.

        Raises:
            InternalConsistencyError: a coordinate lies outside ``theta``
        """
        rows, cols = theta.shape
        bound = []
        for g in self.gates:
            if g.param_coord is None:
                bound.append(g)
                continue
            k, m = g.param_coord
            if not (0 <= k < rows and 0 <= m < cols):
                raise InternalConsistencyError(
                    f"Parameter coordinate {g.param_coord} outside a {rows}x{cols} parameter matrix"
                )
            bound.append(g.with_angle(float(theta[k, m])))
        return Circuit(self.n_qubits, tuple(bound))

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n_qubits, self.gates + tuple(gates))

    def inverse(self) -> "Circuit":
        gates = []
        for g in reversed(self.gates):
            gates.extend(g.inverse())
        return Circuit(self.n_qubits, tuple(gates))
