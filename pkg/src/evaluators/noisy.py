from dataclasses import replace

from ..ansatz import AnsatzSpec, ParameterMatrix
from ..lightcone import light_cone_cache
from ..noise import (
    BackendSpec,
    NoisySimConfig,
    full_routing,
    lcc_routing,
    noisy_full_expectation,
    noisy_lcc_expectation,
)
from ..problems import MaxCutInstance
from ..seeding import derive_seed
from .base import Evaluator


class _NoisyEvaluator(Evaluator):
    noisy = True

    def __init__(self, g: MaxCutInstance, spec: AnsatzSpec, backend: BackendSpec,
                 sim: NoisySimConfig, common_random_numbers: bool = True):
        super().__init__(g, spec)
        self.backend = backend
        self.sim = sim
        self.common_random_numbers = common_random_numbers

    def _call_config(self) -> NoisySimConfig:
        # With common random numbers every call reuses the same trajectories
        if self.common_random_numbers:
            return self.sim
        return replace(self.sim, seed=derive_seed(self.sim.seed, "call", self.calls))


class NoisyLccEvaluator(_NoisyEvaluator):
    tag = "noisy-lcc"

    def __init__(self, g, spec, backend, sim, common_random_numbers=True):
        super().__init__(g, spec, backend, sim, common_random_numbers)
        self.cache = light_cone_cache(g, spec)
        self._routing = lcc_routing(g, spec, backend, sim.placement, self.cache)

    def expectation(self, theta: ParameterMatrix) -> float:
        return noisy_lcc_expectation(self.instance, self.spec, theta, self.backend,
                                     self._call_config(), self.cache)

    @property
    def max_subcircuit_qubits(self) -> int:
        return self.cache.max_component_qubits

    @property
    def routing(self) -> str:
        return self._routing


class NoisyFullEvaluator(_NoisyEvaluator):
    tag = "noisy-full"

    def __init__(self, g, spec, backend, sim, common_random_numbers=True):
        super().__init__(g, spec, backend, sim, common_random_numbers)
        self._routing = full_routing(g, spec, backend, sim.placement)

    def expectation(self, theta: ParameterMatrix) -> float:
        return noisy_full_expectation(self.instance, self.spec, theta, self.backend, self._call_config())

    @property
    def routing(self) -> str:
        return self._routing
