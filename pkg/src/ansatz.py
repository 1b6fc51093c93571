"""
Two-local Ry/CZ ansatz and the full-circuit Max-Cut expectation.

Circuit layout for L layers: a column of Ry gates (parameter column 0), then L
repetitions of [entangling CZ block, Ry column m]. Every Ry carries its (k, m)
parameter coordinate so subcircuits can be re-bound without rebuilding.
"""
import enum
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import InvalidArgumentError, SizeLimitError
from .logging_config import get_logger
from .problems import Assignment, MaxCutInstance
from .seeding import numpy_rng
from .simulator import MAX_DENSE_QUBITS, Circuit, StateVector, cz, ry, run_circuit
from .simulator.statevector import expectation_from_probabilities

logger = get_logger(__name__)

TWO_PI = 2 * math.pi


class Entanglement(str, enum.Enum):
    CIRCULAR = "circular"
    LINEAR = "linear"
    FULL = "full"


@dataclass(frozen=True)
class AnsatzSpec:
    n: int
    layers: int = 1
    entanglement: Entanglement = Entanglement.CIRCULAR

    def __post_init__(self):
        if self.n < 2:
            raise InvalidArgumentError(f"Ansatz needs at least 2 qubits, got {self.n}")
        if self.layers < 1:
            raise InvalidArgumentError(f"Ansatz needs at least 1 layer, got {self.layers}")
        object.__setattr__(self, "entanglement", Entanglement(self.entanglement))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n, self.layers + 1)

    @property
    def num_parameters(self) -> int:
        return self.n * (self.layers + 1)


@dataclass(frozen=True)
class ParameterMatrix:
    """
    n x (L+1) rotation angles, wrapped into [0, 2pi).

    Column 0 is the initial Ry column; column m follows entangling block m.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise InvalidArgumentError(f"Parameter matrix must be 2-D, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvalidArgumentError("Parameter matrix contains non-finite angles")
        arr = np.mod(arr, TWO_PI)
        # mod can round up to exactly 2pi for tiny negative inputs
        arr[arr >= TWO_PI] = 0.0
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape

    @classmethod
    def zeros(cls, spec: AnsatzSpec) -> "ParameterMatrix":
        return cls(np.zeros(spec.shape))

    @classmethod
    def random(cls, spec: AnsatzSpec, rng: np.random.Generator) -> "ParameterMatrix":
        """Angles drawn uniformly from [0, 2pi)."""
        return cls(rng.uniform(0.0, TWO_PI, size=spec.shape))

    @classmethod
    def from_vector(cls, vector: Sequence[float], spec: AnsatzSpec) -> "ParameterMatrix":
        vec = np.asarray(vector, dtype=np.float64)
        if vec.size != spec.num_parameters:
            raise InvalidArgumentError(
                f"Expected {spec.num_parameters} parameters for {spec.shape}, got {vec.size}"
            )
        return cls(vec.reshape(spec.shape))

    @classmethod
    def basis_encoding(cls, spec: AnsatzSpec, bits: Iterable[int]) -> "ParameterMatrix":
        """Column 0 = pi on side-1 vertices, every other column zero."""
        bits = list(bits)
        if len(bits) != spec.n:
            raise InvalidArgumentError(f"Expected {spec.n} bits, got {len(bits)}")
        values = np.zeros(spec.shape)
        values[:, 0] = np.pi * np.asarray(bits, dtype=np.float64)
        return cls(values)

    def to_vector(self) -> np.ndarray:
        return self.values.reshape(-1).copy()


def entangler_pairs(n: int, entanglement: Entanglement) -> List[Tuple[int, int]]:
    """CZ pairs of one entangling block, in emission order."""
    entanglement = Entanglement(entanglement)
    if entanglement is Entanglement.LINEAR:
        return [(k, k + 1) for k in range(n - 1)]
    if entanglement is Entanglement.CIRCULAR:
        pairs = [(k, (k + 1) % n) for k in range(n)]
        # n = 2: the wrap-around pair duplicates (0, 1)
        seen = set()
        unique = []
        for a, b in pairs:
            key = (min(a, b), max(a, b))
            if key not in seen:
                seen.add(key)
                unique.append((a, b))
        return unique
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def ansatz_template(spec: AnsatzSpec) -> Circuit:
    """The ansatz with every Ry at angle 0 and tagged with its parameter coordinate."""
    gates = [ry(k, 0.0, (k, 0)) for k in range(spec.n)]
    pairs = entangler_pairs(spec.n, spec.entanglement)
    for m in range(1, spec.layers + 1):
        gates.extend(cz(a, b) for a, b in pairs)
        gates.extend(ry(k, 0.0, (k, m)) for k in range(spec.n))
    return Circuit(spec.n, tuple(gates))


def check_theta(spec: AnsatzSpec, theta: ParameterMatrix) -> None:
    if theta.shape != spec.shape:
        raise InvalidArgumentError(f"Parameter matrix shape {theta.shape} does not match {spec.shape}")


def build_ansatz(spec: AnsatzSpec, theta: ParameterMatrix) -> Circuit:
    check_theta(spec, theta)
    return ansatz_template(spec).bind(theta.values)


def cost_from_correlations(num_edges: int, correlations: Iterable[float]) -> float:
    """Max-Cut expectation |E|/2 - 1/2 * sum of <Z_i Z_j>."""
    return 0.5 * num_edges - 0.5 * float(sum(correlations))


def _check_dense(g: MaxCutInstance, spec: AnsatzSpec) -> None:
    if spec.n != g.n:
        raise InvalidArgumentError(f"Ansatz has {spec.n} qubits but the instance has {g.n} vertices")
    if g.n > MAX_DENSE_QUBITS:
        raise SizeLimitError(f"Dense simulation limited to {MAX_DENSE_QUBITS} qubits, got {g.n}")


def full_state(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix) -> StateVector:
    _check_dense(g, spec)
    return run_circuit(build_ansatz(spec, theta))


def edge_correlations(state: StateVector, edges: Sequence[Tuple[int, int]]) -> np.ndarray:
    """<Z_i Z_j> for every edge, from one statevector."""
    probs = state.probabilities()
    return np.array(
        [expectation_from_probabilities(probs, state.n_qubits, (i, j)) for i, j in edges],
        dtype=np.float64,
    )


def full_expectation(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix) -> float:
    """Max-Cut expectation from the single full-circuit state."""
    state = full_state(g, spec, theta)
    return cost_from_correlations(g.num_edges, edge_correlations(state, g.edges))


def sample_bitstrings(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix,
                      shots: int, seed: int) -> Counter:
    """
    Draw ``shots`` measurement outcomes of the full-circuit state.

    Returns:
        Counter mapping Assignment -> number of times it was drawn
    """
    if shots <= 0:
        raise InvalidArgumentError(f"shots must be positive, got {shots}")
    probs = full_state(g, spec, theta).probabilities()
    probs = probs / probs.sum()
    rng = numpy_rng(seed)
    counts = rng.multinomial(shots, probs)
    logger.debug(f"Sampled {shots} shots over {int(np.count_nonzero(counts))} distinct cuts (n={g.n})")
    return Counter({Assignment.from_index(int(idx), g.n): int(counts[idx]) for idx in np.flatnonzero(counts)})
