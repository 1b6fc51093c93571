"""
Device descriptions used by the noisy simulator.

A backend is a coupling map plus error tables: CNOT error per coupling, X/SX
error and readout error per qubit. T1, T2 and frequency are carried for
reference only.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Tuple, Union

import networkx as nx

from ..config_loader import get_backend_file
from ..config_schemas import BackendFile
from ..errors import InvalidArgumentError

Pair = Tuple[int, int]


def _key(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class BackendSpec:
    name: str
    n_qubits: int
    couplings: Tuple[Pair, ...]
    cnot_error: Dict[Pair, float]
    sq_error: Dict[int, float]
    readout_error: Dict[int, float]
    t1: Dict[int, float] = field(default_factory=dict)
    t2: Dict[int, float] = field(default_factory=dict)
    frequency: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        for table_name in ("sq_error", "readout_error"):
            table = getattr(self, table_name)
            if set(table) != set(range(self.n_qubits)):
                raise InvalidArgumentError(f"{table_name} must cover qubits 0..{self.n_qubits - 1}")
        couplings = tuple(sorted(_key(a, b) for a, b in self.couplings))
        if set(couplings) != set(self.cnot_error):
            raise InvalidArgumentError("cnot_error must cover exactly the listed couplings")
        for p in list(self.cnot_error.values()) + list(self.sq_error.values()) + list(self.readout_error.values()):
            if not 0.0 <= p <= 1.0:
                raise InvalidArgumentError(f"Error probability {p} outside [0, 1]")
        object.__setattr__(self, "couplings", couplings)

    def __hash__(self) -> int:
        return hash((self.name, self.n_qubits, self.couplings))

    @classmethod
    def from_file(cls, cfg: BackendFile) -> "BackendSpec":
        return cls(
            name=cfg.name,
            n_qubits=cfg.n_qubits,
            couplings=tuple(_key(*c.pair) for c in cfg.couplings),
            cnot_error={_key(*c.pair): c.cnot_error for c in cfg.couplings},
            sq_error={q: p.sq_error for q, p in cfg.qubits.items()},
            readout_error={q: p.readout_error for q, p in cfg.qubits.items()},
            t1={q: p.t1_us for q, p in cfg.qubits.items()},
            t2={q: p.t2_us for q, p in cfg.qubits.items()},
            frequency={q: p.frequency_ghz for q, p in cfg.qubits.items()},
        )

    @classmethod
    def uniform(cls, n_qubits: int, cnot_error: float = 0.0, sq_error: float = 0.0,
                readout_error: float = 0.0, name: str = "uniform") -> "BackendSpec":
        """Linear-chain device with the same error everywhere (zero by default)."""
        couplings = tuple((q, q + 1) for q in range(n_qubits - 1))
        return cls(
            name=name,
            n_qubits=n_qubits,
            couplings=couplings,
            cnot_error={c: cnot_error for c in couplings},
            sq_error={q: sq_error for q in range(n_qubits)},
            readout_error={q: readout_error for q in range(n_qubits)},
        )

    def has_coupling(self, a: int, b: int) -> bool:
        return _key(a, b) in self.cnot_error

    def cnot_error_for(self, a: int, b: int) -> float:
        return self.cnot_error[_key(a, b)]

    @property
    def mean_cnot_error(self) -> float:
        if not self.cnot_error:
            return 0.0
        return sum(self.cnot_error.values()) / len(self.cnot_error)

    def coupling_graph(self) -> nx.Graph:
        """Coupling map with ``error`` edge attributes."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n_qubits))
        for pair, err in self.cnot_error.items():
            g.add_edge(*pair, error=err)
        return g

    def scaled(self, factor: float) -> "BackendSpec":
        """Every error probability multiplied by ``factor`` (clipped to 1)."""
        def scale(table):
            return {k: min(1.0, v * factor) for k, v in table.items()}

        return BackendSpec(
            name=f"{self.name}x{factor:g}",
            n_qubits=self.n_qubits,
            couplings=self.couplings,
            cnot_error=scale(self.cnot_error),
            sq_error=scale(self.sq_error),
            readout_error=scale(self.readout_error),
            t1=dict(self.t1),
            t2=dict(self.t2),
            frequency=dict(self.frequency),
        )


def load_backend(path: Union[str, Path]) -> BackendSpec:
    """
    Load a backend from a YAML file or a bundled name ("backend7", "backend27").

    Raises:
        ParseError: schema violation, naming the offending field
        InvalidArgumentError: unknown name or missing file
    """
    return BackendSpec.from_file(get_backend_file(path))
