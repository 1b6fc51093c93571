from ..ansatz import AnsatzSpec, ParameterMatrix, full_expectation
from ..lightcone import light_cone_cache
from ..problems import MaxCutInstance
from .base import Evaluator


class NoiselessLccEvaluator(Evaluator):
    """Exact expectation from per-edge light-cone subcircuits."""

    tag = "noiseless-lcc"

    def __init__(self, g: MaxCutInstance, spec: AnsatzSpec, tighten: bool = True):
        super().__init__(g, spec)
        self.cache = light_cone_cache(g, spec, tighten)

    def expectation(self, theta: ParameterMatrix) -> float:
        return self.cache.expectation(theta)

    @property
    def max_subcircuit_qubits(self) -> int:
        return self.cache.max_component_qubits


class NoiselessFullEvaluator(Evaluator):
    """Exact expectation from the full-width statevector."""

    tag = "noiseless-full"

    def expectation(self, theta: ParameterMatrix) -> float:
        return full_expectation(self.instance, self.spec, theta)
