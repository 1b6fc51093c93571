"""
Noisy Max-Cut expectations with and without light-cone cancellation.

The LCC path simulates every subcircuit component on its own, seeded per edge
and component. The full path simulates the whole ansatz once per call and
reads every edge parity from the same trajectories.
"""
from typing import Optional

from ..ansatz import AnsatzSpec, ParameterMatrix, build_ansatz, check_theta, cost_from_correlations
from ..errors import InvalidArgumentError, SizeLimitError
from ..lightcone import LightConeCache, light_cone_cache
from ..logging_config import get_logger
from ..problems import MaxCutInstance
from ..seeding import derive_seed
from .backend import BackendSpec
from .placement import ROUTING_DIRECT, ROUTING_FALLBACK
from .trajectories import NoisySimConfig, noisy_expectation, noisy_expectations
from .transpiler import transpile

logger = get_logger(__name__)

# Widest full circuit simulated with trajectories
MAX_NOISY_FULL_QUBITS = 15


def noisy_lcc_expectation(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix,
                          backend: BackendSpec, cfg: NoisySimConfig,
                          cache: Optional[LightConeCache] = None) -> float:
    """
    Max-Cut expectation where each edge term is a noisy estimate from its
    light-cone subcircuits.

    Raises:
        CapacityError: a subcircuit is wider than the device
    """
    cache = cache or light_cone_cache(g, spec)
    check_theta(spec, theta)
    correlations = []
    for i, j in g.edges:
        value = 1.0
        for c_idx, sub in enumerate(cache.subcircuits((i, j))):
            tc = transpile(sub.circuit.bind(theta.values), backend, cfg.placement)
            sub_cfg = NoisySimConfig(
                trajectories=cfg.trajectories,
                shots=cfg.shots,
                seed=derive_seed(cfg.seed, "edge", i, j, c_idx),
                placement=cfg.placement,
            )
            value *= noisy_expectation(tc, sub.observable_positions, sub_cfg)
        correlations.append(value)
    return cost_from_correlations(g.num_edges, correlations)


def check_full_size(g: MaxCutInstance, spec: AnsatzSpec, backend: BackendSpec) -> None:
    if spec.n != g.n:
        raise InvalidArgumentError(f"Ansatz has {spec.n} qubits but the instance has {g.n} vertices")
    if g.n > MAX_NOISY_FULL_QUBITS:
        raise SizeLimitError(f"Noisy full-circuit simulation limited to {MAX_NOISY_FULL_QUBITS} qubits, got {g.n}")


def noisy_full_expectation(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix,
                           backend: BackendSpec, cfg: NoisySimConfig) -> float:
    """
    Max-Cut expectation from noisy trajectories of the whole ansatz.

    Raises:
        SizeLimitError: more than 15 qubits
        CapacityError: wider than the device
    """
    check_full_size(g, spec, backend)
    tc = transpile(build_ansatz(spec, theta), backend, cfg.placement)
    sub_cfg = NoisySimConfig(
        trajectories=cfg.trajectories,
        shots=cfg.shots,
        seed=derive_seed(cfg.seed, "full"),
        placement=cfg.placement,
    )
    correlations = noisy_expectations(tc, list(g.edges), sub_cfg)
    return cost_from_correlations(g.num_edges, correlations)


def lcc_routing(g: MaxCutInstance, spec: AnsatzSpec, backend: BackendSpec, placement: str,
                cache: Optional[LightConeCache] = None) -> str:
    """``fallback`` if any subcircuit needs the mean-error fallback, else ``direct``."""
    cache = cache or light_cone_cache(g, spec)
    theta = ParameterMatrix.zeros(spec)
    for subs in cache.edges.values():
        for sub in subs:
            if transpile(sub.circuit.bind(theta.values), backend, placement).routing == ROUTING_FALLBACK:
                return ROUTING_FALLBACK
    return ROUTING_DIRECT


def full_routing(g: MaxCutInstance, spec: AnsatzSpec, backend: BackendSpec, placement: str) -> str:
    check_full_size(g, spec, backend)
    return transpile(build_ansatz(spec, ParameterMatrix.zeros(spec)), backend, placement).routing
