"""
Monte-Carlo trajectory simulation of a transpiled circuit.

Noise model:

- after a gate with error p on k qubits, with probability p a uniformly random
  k-qubit Pauli (identity included) is applied, which unravels the
  depolarizing channel rho -> (1 - p) rho + p I / 2^k;
- every measured bit flips independently with its qubit's readout error.

Trajectories run as one batch along a leading array axis, chunked to bound
memory. For each trajectory the observed parity of the target bits is
Bernoulli with the exact post-readout probability, and ``shots`` draws are
taken from it.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import ContractViolationError, InvalidArgumentError
from ..logging_config import get_logger
from ..seeding import numpy_rng
from ..simulator.statevector import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    apply_gate_tensor,
    apply_matrix_1q,
    expectation_from_probabilities,
)
from .placement import PLACEMENT_STRATEGIES
from .transpiler import BASIS_GATES, TranspiledCircuit

logger = get_logger(__name__)

# Largest batch * 2^n amplitude count simulated at once
MAX_BATCH_AMPLITUDES = 1 << 22

_PAULIS = (None, PAULI_X, PAULI_Y, PAULI_Z)


@dataclass(frozen=True)
class NoisySimConfig:
    trajectories: int = 256
    shots: int = 1024
    seed: int = 0
    placement: str = "first-path"

    def __post_init__(self):
        if self.trajectories < 1:
            raise InvalidArgumentError(f"trajectories must be >= 1, got {self.trajectories}")
        if self.shots < 1:
            raise InvalidArgumentError(f"shots must be >= 1, got {self.shots}")
        if self.placement not in PLACEMENT_STRATEGIES:
            raise InvalidArgumentError(f"Unknown placement strategy '{self.placement}'")


def _apply_random_paulis(tensor: np.ndarray, qubits: Sequence[int], p: float,
                         n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Depolarizing unravelling: with probability ``p`` a trajectory gets a
    uniformly drawn k-qubit Pauli, identity included.

    The identity is one of the 4**k draws, so the chance of a non-identity
    error is p * (4**k - 1) / 4**k (3p/4 for a single qubit, 15p/16 for a
    CNOT). Device error rates are used as ``p`` unchanged.
    """
    batch = tensor.shape[0]
    fired = np.flatnonzero(rng.random(batch) < p)
    if fired.size == 0:
        return tensor
    k = len(qubits)
    choice = rng.integers(0, 4 ** k, size=fired.size)
    for pos, q in enumerate(qubits):
        # Digit ``pos`` of the base-4 Pauli index picks the operator on q
        digit = (choice // (4 ** (k - 1 - pos))) % 4
        for pauli in (1, 2, 3):
            rows = fired[digit == pauli]
            if rows.size:
                tensor[rows] = apply_matrix_1q(tensor[rows], _PAULIS[pauli], q, n, lead=1)
    return tensor


def _simulate_chunk(tc: TranspiledCircuit, batch: int, rng: np.random.Generator) -> np.ndarray:
    n = tc.n_qubits
    tensor = np.zeros((batch,) + (2,) * n, dtype=np.complex128)
    tensor[(slice(None),) + (0,) * n] = 1.0
    for gate, err in zip(tc.circuit.gates, tc.errors):
        if gate.kind not in BASIS_GATES:
            raise ContractViolationError(f"Noisy simulation needs basis gates, got {gate.kind.value}")
        tensor = np.ascontiguousarray(apply_gate_tensor(tensor, gate, n, lead=1))
        if err > 0.0:
            tensor = _apply_random_paulis(tensor, gate.qubits, err, n, rng)
    probs = np.abs(tensor.reshape(batch, -1)) ** 2
    return probs


def _readout_flip_probability(readout_errors: Sequence[float], targets: Iterable[int]) -> float:
    """Probability that an odd number of the target bits flip."""
    prod = 1.0
    for t in targets:
        prod *= 1.0 - 2.0 * readout_errors[t]
    return 0.5 * (1.0 - prod)


def noisy_expectations(tc: TranspiledCircuit, target_sets: Sequence[Sequence[int]],
                       cfg: NoisySimConfig) -> np.ndarray:
    """
    Estimated Z-string expectations for several target sets from one batch of
    trajectories. Deterministic given ``cfg.seed``.
    """
    n = tc.n_qubits
    target_sets = [tuple(int(t) for t in ts) for ts in target_sets]
    for ts in target_sets:
        if not ts or any(not 0 <= t < n for t in ts):
            raise InvalidArgumentError(f"Invalid target set {ts} for {n} qubits")

    rng = numpy_rng(cfg.seed)
    chunk = max(1, min(cfg.trajectories, MAX_BATCH_AMPLITUDES >> n))
    flip = np.array([_readout_flip_probability(tc.readout_errors, ts) for ts in target_sets])
    totals = np.zeros(len(target_sets))
    done = 0
    while done < cfg.trajectories:
        batch = min(chunk, cfg.trajectories - done)
        probs = _simulate_chunk(tc, batch, rng)
        for idx, ts in enumerate(target_sets):
            z = expectation_from_probabilities(probs, n, ts)
            odd = np.clip(0.5 * (1.0 - z), 0.0, 1.0)
            observed_odd = odd * (1.0 - flip[idx]) + (1.0 - odd) * flip[idx]
            counts = rng.binomial(cfg.shots, observed_odd)
            totals[idx] += float(np.sum(1.0 - 2.0 * counts / cfg.shots))
        done += batch
    logger.debug(
        f"Simulated {cfg.trajectories} trajectories x {cfg.shots} shots on {n} qubits",
        extra={"backend": tc.backend_name},
    )
    return np.clip(totals / cfg.trajectories, -1.0, 1.0)


def noisy_expectation(tc: TranspiledCircuit, targets: Sequence[int], cfg: NoisySimConfig) -> float:
    """Estimated expectation of the Z-string on ``targets``."""
    return float(noisy_expectations(tc, [targets], cfg)[0])
