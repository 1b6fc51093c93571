"""
Objective evaluators for the VQE loop.

An evaluator turns a parameter matrix into a Max-Cut expectation for one
instance and ansatz. Structure (light-cone caches, placements) is prepared in
the constructor; ``expectation`` is called once per optimizer step.
"""
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from ..ansatz import AnsatzSpec, ParameterMatrix, sample_bitstrings
from ..lightcone import light_cone_cache
from ..problems import Assignment, MaxCutInstance, cut_value
from ..simulator import MAX_DENSE_QUBITS

ROUTING_NONE = "none"


class Evaluator(ABC):
    tag = "base"
    noisy = False

    def __init__(self, g: MaxCutInstance, spec: AnsatzSpec):
        self.instance = g
        self.spec = spec
        self.calls = 0

    @abstractmethod
    def expectation(self, theta: ParameterMatrix) -> float:
        """Max-Cut expectation at ``theta``."""

    def __call__(self, theta: ParameterMatrix) -> float:
        self.calls += 1
        return self.expectation(theta)

    @property
    def max_subcircuit_qubits(self) -> int:
        """Width of the largest circuit this evaluator simulates."""
        return self.spec.n

    @property
    def routing(self) -> str:
        return ROUTING_NONE

    def best_cut(self, theta: ParameterMatrix, shots: int, seed: int) -> Tuple[int, Assignment]:
        """
        Best cut read out of the ideal state at ``theta``.

        Up to 20 vertices this samples ``shots`` bit strings from the full
        state. Larger instances round single-qubit marginals <Z_k> from
        light-cone subcircuits instead.
        """
        g = self.instance
        if g.n <= MAX_DENSE_QUBITS:
            samples = sample_bitstrings(g, self.spec, theta, shots, seed)
            best: Optional[Tuple[int, Assignment]] = None
            for assignment in sorted(samples, key=str):
                value = cut_value(g, assignment)
                if best is None or value > best[0]:
                    best = (value, assignment)
            return best
        assignment = light_cone_cache(g, self.spec).rounded_assignment(theta)
        return cut_value(g, assignment), assignment
