"""
Per-instance subcircuit cache.

Subcircuit structure depends only on the instance, the ansatz shape and the
tightening flag; the optimizer only changes angles. The cache is built once
and is read-only afterwards, so it is safe to share between evaluations.
"""
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Tuple

import numpy as np

from ..ansatz import AnsatzSpec, ParameterMatrix, check_theta, cost_from_correlations
from ..errors import InvalidArgumentError
from ..logging_config import get_logger
from ..problems import Assignment, MaxCutInstance
from .subcircuits import (
    Subcircuit,
    build_observable_subcircuits,
    build_subcircuits,
    param_coords,
    subcircuit_expectation,
)

logger = get_logger(__name__)

Edge = Tuple[int, int]


class LightConeCache:
    """Subcircuits for every edge of ``g``; single-qubit cones are built on first use."""

    def __init__(self, g: MaxCutInstance, spec: AnsatzSpec, tighten: bool = True):
        if spec.n != g.n:
            raise InvalidArgumentError(f"Ansatz has {spec.n} qubits but the instance has {g.n} vertices")
        self.instance = g
        self.spec = spec
        self.tighten = tighten
        edges = {edge: tuple(build_subcircuits(g, spec, edge, tighten)) for edge in g.edges}
        self._edges: Mapping[Edge, Tuple[Subcircuit, ...]] = MappingProxyType(edges)
        self._marginals = None
        logger.debug(
            f"Built light-cone cache for {g.instance_id}: {len(edges)} edges, "
            f"largest component {self.max_component_qubits} qubits"
        )

    @property
    def edges(self) -> Mapping[Edge, Tuple[Subcircuit, ...]]:
        return self._edges

    def subcircuits(self, edge: Edge) -> Tuple[Subcircuit, ...]:
        try:
            return self._edges[edge]
        except KeyError:
            raise InvalidArgumentError(f"{edge} is not an edge of {self.instance.instance_id}") from None

    @property
    def max_component_qubits(self) -> int:
        return max((sub.n_qubits for subs in self._edges.values() for sub in subs), default=0)

    def param_coords(self) -> set:
        coords = set()
        for subs in self._edges.values():
            coords |= param_coords(subs)
        return coords

    def marginal_cones(self) -> Tuple[Tuple[Subcircuit, ...], ...]:
        if self._marginals is None:
            self._marginals = tuple(
                tuple(build_observable_subcircuits(self.spec, (k,), self.tighten))
                for k in range(self.spec.n)
            )
        return self._marginals

    def edge_correlations(self, theta: ParameterMatrix) -> np.ndarray:
        check_theta(self.spec, theta)
        return np.array(
            [subcircuit_expectation(self._edges[e], theta) for e in self.instance.edges],
            dtype=np.float64,
        )

    def expectation(self, theta: ParameterMatrix) -> float:
        return cost_from_correlations(self.instance.num_edges, self.edge_correlations(theta))

    def marginals(self, theta: ParameterMatrix) -> np.ndarray:
        """<Z_k> for every qubit from single-qubit light cones."""
        check_theta(self.spec, theta)
        return np.array([subcircuit_expectation(subs, theta) for subs in self.marginal_cones()])

    def rounded_assignment(self, theta: ParameterMatrix) -> Assignment:
        """Side 1 wherever <Z_k> < 0."""
        return Assignment(tuple(int(z < 0) for z in self.marginals(theta)))


@lru_cache(maxsize=64)
def light_cone_cache(g: MaxCutInstance, spec: AnsatzSpec, tighten: bool = True) -> LightConeCache:
    return LightConeCache(g, spec, tighten)


def lcc_expectation(g: MaxCutInstance, spec: AnsatzSpec, theta: ParameterMatrix,
                    tighten: bool = True) -> float:
    """Max-Cut expectation summed over per-edge light-cone subcircuits."""
    return light_cone_cache(g, spec, tighten).expectation(theta)
