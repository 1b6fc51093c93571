"""
Logical-to-physical qubit placement on a device coupling map.

No SWAP routing is done. A circuit whose two-qubit interactions form a simple
path is laid along a path of the coupling map; any interaction that still
lands on an uncoupled physical pair is charged the device's mean CNOT error
and the placement is tagged ``fallback``.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import CapacityError, InvalidArgumentError
from ..logging_config import get_logger
from .backend import BackendSpec

logger = get_logger(__name__)

PLACEMENT_STRATEGIES = ("first-path", "lowest-error")
ROUTING_DIRECT = "direct"
ROUTING_FALLBACK = "fallback"

# Upper bound on candidate paths scored by the lowest-error strategy
MAX_SCORED_PATHS = 200_000

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Placement:
    layout: Tuple[int, ...]  # layout[logical] = physical
    routing: str

    def physical(self, logical: int) -> int:
        return self.layout[logical]


def interaction_order(n_qubits: int, pairs: Sequence[Pair]) -> Optional[List[int]]:
    """
    Logical qubits in path order when the interaction graph is one simple path
    covering every qubit; None otherwise.
    """
    if n_qubits == 1:
        return [0]
    g = nx.Graph()
    g.add_nodes_from(range(n_qubits))
    g.add_edges_from(pairs)
    if not nx.is_connected(g) or g.number_of_edges() != n_qubits - 1:
        return None
    if max(d for _, d in g.degree()) > 2:
        return None
    start = min(node for node, d in g.degree() if d == 1)
    order = [start]
    previous = None
    while len(order) < n_qubits:
        nxt = min(v for v in g.neighbors(order[-1]) if v != previous)
        previous = order[-1]
        order.append(nxt)
    return order


def iter_device_paths(device: nx.Graph, k: int) -> Iterator[Tuple[int, ...]]:
    """Simple paths with k nodes, depth-first with ascending node order."""
    def extend(path: List[int], seen: set):
        if len(path) == k:
            yield tuple(path)
            return
        for v in sorted(device.neighbors(path[-1])):
            if v not in seen:
                path.append(v)
                seen.add(v)
                yield from extend(path, seen)
                seen.discard(v)
                path.pop()

    for start in sorted(device.nodes):
        yield from extend([start], {start})


def _path_error(backend: BackendSpec, path: Sequence[int]) -> float:
    return sum(backend.cnot_error_for(a, b) for a, b in zip(path, path[1:]))


def _greedy_nodes(device: nx.Graph, k: int) -> List[int]:
    """Breadth-first from qubit 0, then any remaining qubits ascending."""
    order = [0] + [v for _, v in nx.bfs_edges(device, 0, sort_neighbors=sorted)]
    seen = set(order)
    order += [v for v in sorted(device.nodes) if v not in seen]
    return order[:k]


@lru_cache(maxsize=512)
def place(n_qubits: int, pairs: Tuple[Pair, ...], backend: BackendSpec,
          strategy: str = "first-path") -> Placement:
    """
    Choose physical qubits for an ``n_qubits``-wide circuit.

    Raises:
        CapacityError: circuit wider than the device
        InvalidArgumentError: unknown strategy
    """
    if strategy not in PLACEMENT_STRATEGIES:
        raise InvalidArgumentError(f"Unknown placement strategy '{strategy}', expected one of {PLACEMENT_STRATEGIES}")
    if n_qubits > backend.n_qubits:
        raise CapacityError(f"Circuit needs {n_qubits} qubits but {backend.name} has {backend.n_qubits}")

    device = backend.coupling_graph()
    order = interaction_order(n_qubits, pairs) or list(range(n_qubits))

    path = None
    if strategy == "first-path":
        path = next(iter_device_paths(device, n_qubits), None)
    else:
        best = None
        for count, candidate in enumerate(iter_device_paths(device, n_qubits)):
            if count >= MAX_SCORED_PATHS:
                break
            err = _path_error(backend, candidate)
            if best is None or err < best[0]:
                best = (err, candidate)
        path = best[1] if best else None

    nodes = list(path) if path is not None else _greedy_nodes(device, n_qubits)
    layout: Dict[int, int] = {logical: nodes[t] for t, logical in enumerate(order)}
    layout_tuple = tuple(layout[q] for q in range(n_qubits))

    routing = ROUTING_DIRECT
    for a, b in set(pairs):
        if not backend.has_coupling(layout_tuple[a], layout_tuple[b]):
            routing = ROUTING_FALLBACK
            break
    if routing == ROUTING_FALLBACK:
        logger.warning(
            f"Placement of {n_qubits} qubits on {backend.name} needs the mean-error fallback",
            extra={"backend": backend.name},
        )
    return Placement(layout=layout_tuple, routing=routing)
