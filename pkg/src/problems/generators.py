"""
Seeded instance generators.

Both generators draw exclusively from ``SplitMix64`` so that an instance is a
pure function of its parameters and seed. The resulting edge lists are written
to disk by the dataset builder and the files are the canonical dataset.
"""
from collections import defaultdict
from typing import Dict, Optional, Set, Tuple

from ..errors import InvalidArgumentError, RetryExhaustedError
from ..logging_config import get_logger
from ..seeding import SplitMix64
from .graph import GraphMeta, MaxCutInstance

logger = get_logger(__name__)

DEFAULT_REGULAR_ATTEMPTS = 1000


def gen_gnp(n: int, p: float, seed: int) -> MaxCutInstance:
    """
    Erdos-Renyi G(n, p): every pair (u < v), in lexicographic order, is kept
    independently with probability p.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"Edge probability must be in [0, 1], got {p}")
    if n < 0:
        raise InvalidArgumentError(f"Vertex count must be non-negative, got {n}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return MaxCutInstance(n=n, edges=tuple(edges), meta=GraphMeta(kind="gnp", seed=seed, p=p))


def _try_pairing(n: int, d: int, rng: SplitMix64) -> Optional[Set[Tuple[int, int]]]:
    """
    One pass of the pairing model with repair.

    Stubs are shuffled and paired; pairs that would form a self-loop or a
    duplicate edge are rejected and their stubs re-paired on the next round.
    Returns None when the leftover stubs can no longer form a valid edge.
    """
    edges: Set[Tuple[int, int]] = set()
    stubs = list(range(n)) * d

    while stubs:
        leftover: Dict[int, int] = defaultdict(int)
        rng.shuffle(stubs)
        stub_iter = iter(stubs)
        for s1, s2 in zip(stub_iter, stub_iter):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover[s1] += 1
                leftover[s2] += 1

        if not _has_valid_pair(edges, leftover):
            return None

        stubs = [node for node, count in leftover.items() for _ in range(count)]
    return edges


def _has_valid_pair(edges: Set[Tuple[int, int]], leftover: Dict[int, int]) -> bool:
    if not leftover:
        return True
    nodes = list(leftover)
    for a_idx, s1 in enumerate(nodes):
        for s2 in nodes[:a_idx]:
            pair = (s1, s2) if s1 < s2 else (s2, s1)
            if pair not in edges:
                return True
    return False


def gen_regular(n: int, d: int, seed: int,
                max_attempts: int = DEFAULT_REGULAR_ATTEMPTS) -> MaxCutInstance:
    """
    Simple d-regular graph from the pairing (configuration) model.

    Raises:
        InvalidArgumentError: n*d odd, or d outside [0, n)
        RetryExhaustedError: no simple graph found within ``max_attempts`` passes
    """
    if (n * d) % 2 != 0:
        raise InvalidArgumentError(f"n*d must be even, got n={n}, d={d}")
    if not 0 <= d < n:
        raise InvalidArgumentError(f"Degree must satisfy 0 <= d < n, got n={n}, d={d}")

    meta = GraphMeta(kind="regular", seed=seed, d=d)
    if d == 0:
        return MaxCutInstance(n=n, edges=(), meta=meta)

    rng = SplitMix64(seed)
    for attempt in range(1, max_attempts + 1):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            if attempt > 1:
                logger.debug(f"Regular graph n={n} d={d} seed={seed} needed {attempt} passes")
            return MaxCutInstance(n=n, edges=tuple(edges), meta=meta)

    raise RetryExhaustedError(
        f"No simple {d}-regular graph on {n} vertices after {max_attempts} attempts (seed={seed})"
    )
