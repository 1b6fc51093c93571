"""
Max-Cut instances and assignments.

Vertex k of a graph is qubit k of every circuit built for it, and bit k of an
assignment. Bit strings are written vertex 0 first: "01010" means vertex 1 and
vertex 3 are on side 1.
"""
import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import InvalidArgumentError, SizeLimitError

BRUTEFORCE_HARD_CAP = 26

# Assignments enumerated per numpy chunk in the brute-force search
_BRUTEFORCE_CHUNK_BITS = 20

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GraphMeta:
    """How an instance was produced: generator kind, its parameter, and seed."""

    kind: str = "custom"  # "gnp" | "regular" | "custom"
    seed: Optional[int] = None
    p: Optional[float] = None
    d: Optional[int] = None

    def describe(self) -> str:
        if self.kind == "gnp":
            return f"kind=gnp p={float(self.p)!r} seed={self.seed}"
        if self.kind == "regular":
            return f"kind=regular d={self.d} seed={self.seed}"
        return "kind=custom"


@dataclass(frozen=True)
class MaxCutInstance:
    """
    Undirected, unweighted Max-Cut instance.

    Edges are stored as sorted pairs (u < v) in lexicographic order, so two
    instances with the same edge set compare equal regardless of input order.
    """

    n: int
    edges: Tuple[Edge, ...]
    meta: GraphMeta = field(default_factory=GraphMeta)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgumentError(f"Vertex count must be non-negative, got {self.n}")
        canonical = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidArgumentError(f"Self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgumentError(f"Edge ({u}, {v}) out of range for n={self.n}")
            canonical.append((min(u, v), max(u, v)))
        canonical.sort()
        for a, b in zip(canonical, canonical[1:]):
            if a == b:
                raise InvalidArgumentError(f"Duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canonical))

        if self.meta.kind == "regular" and self.meta.d is not None:
            degrees = self.degrees()
            if np.any(degrees != self.meta.d) or len(canonical) * 2 != self.n * self.meta.d:
                raise InvalidArgumentError(
                    f"Instance tagged {self.meta.d}-regular but degrees are not all {self.meta.d}"
                )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   meta: Optional[GraphMeta] = None) -> "MaxCutInstance":
        return cls(n=n, edges=tuple((int(u), int(v)) for u, v in edges), meta=meta or GraphMeta())

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) integer array."""
        arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        arr.setflags(write=False)
        return arr

    @property
    def instance_id(self) -> str:
        """Stable identifier used for file names and result rows."""
        meta = self.meta
        if meta.kind == "gnp":
            return f"gnp-n{self.n}-p{meta.p:g}-s{meta.seed}"
        if meta.kind == "regular":
            return f"reg-n{self.n}-d{meta.d}-s{meta.seed}"
        digest = hashlib.blake2b(repr(self.edges).encode(), digest_size=4).hexdigest()
        return f"custom-n{self.n}-m{self.num_edges}-{digest}"

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Assignment:
    """A side (0 or 1) for every vertex."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise InvalidArgumentError(f"Assignment bits must be 0 or 1, got {self.bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "Assignment":
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_index(cls, index: int, n: int) -> "Assignment":
        """Basis-state index to assignment; bit k of the index is vertex k."""
        return cls(tuple((index >> k) & 1 for k in range(n)))

    def to_index(self) -> int:
        return sum(b << k for k, b in enumerate(self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def complement(a: Assignment) -> Assignment:
    return Assignment(tuple(1 - b for b in a.bits))


def cut_value(g: MaxCutInstance, a: Assignment) -> int:
    """Number of edges whose endpoints lie on different sides."""
    if len(a) != g.n:
        raise InvalidArgumentError(f"Assignment length {len(a)} does not match n={g.n}")
    bits = a.bits
    return sum(bits[u] ^ bits[v] for u, v in g.edges)


def max_cut_bruteforce(g: MaxCutInstance, cap: int = BRUTEFORCE_HARD_CAP) -> Tuple[int, Assignment]:
    """
    Exact Max-Cut by enumeration.

    Vertex 0 is fixed to side 0 (a cut and its complement have the same value),
    so 2^(n-1) assignments are scanned in vectorized chunks.

    Returns:
        (value, witness) with cut_value(g, witness) == value

    Raises:
        SizeLimitError: if g.n exceeds ``cap``
    """
    if g.n > cap:
        raise SizeLimitError(f"Brute force limited to n <= {cap}, got n={g.n}")
    if g.n <= 1 or g.num_edges == 0:
        return 0, Assignment((0,) * g.n)

    total = 1 << (g.n - 1)
    chunk = 1 << min(g.n - 1, _BRUTEFORCE_CHUNK_BITS)
    best_value, best_index = -1, 0
    for start in range(0, total, chunk):
        # Shift left so vertex 0 stays on side 0
        full = np.arange(start, min(start + chunk, total), dtype=np.int64) << 1
        cuts = np.zeros(full.shape, dtype=np.int32)
        for u, v in g.edges:
            cuts += (((full >> u) ^ (full >> v)) & 1).astype(np.int32)
        pos = int(np.argmax(cuts))
        if cuts[pos] > best_value:
            best_value, best_index = int(cuts[pos]), int(full[pos])
    return best_value, Assignment.from_index(best_index, g.n)
