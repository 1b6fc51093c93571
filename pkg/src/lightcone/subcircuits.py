"""
Pruned subcircuits for local Z-string observables.

Construction for one observable:

1. Filter the ansatz template down to the light cone: Ry column m is kept on
   the radius ``L - m + 1`` set (column 0 on the radius-L set), CZ block m on
   the radius ``L - m + 1`` entanglers. Gate order is the ansatz order.
2. Optionally tighten with a backward causal sweep: walking from the last
   gate to the first, a gate survives only if it touches the current backward
   support; a surviving CZ adds both its qubits to the support. Every dropped
   gate commutes with the Heisenberg-evolved observable, so the expectation is
   unchanged.
3. Split the survivors into connected components of their CZ graph. A
   component that holds no observable qubit is discarded; the expectation is
   the product over components of the Z-string restricted to each.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from ..ansatz import AnsatzSpec, ParameterMatrix, ansatz_template
from ..errors import InvalidArgumentError
from ..logging_config import get_logger
from ..problems import MaxCutInstance
from ..simulator import Circuit, GateKind, expectation_pauli_z, run_circuit
from .cones import LightCone, observable_cone

logger = get_logger(__name__)


@dataclass(frozen=True)
class Subcircuit:
    """
    One connected piece of a pruned circuit.

    ``qubits`` lists the original qubit labels; compact label c stands for
    ``qubits[c]``. The circuit is an unbound template over compact labels whose
    Ry gates keep their original parameter coordinates.
    """

    qubits: Tuple[int, ...]
    circuit: Circuit
    observables: Tuple[int, ...]

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    @property
    def qubit_map(self) -> Dict[int, int]:
        return {q: c for c, q in enumerate(self.qubits)}

    @property
    def observable_positions(self) -> Tuple[int, ...]:
        mapping = self.qubit_map
        return tuple(mapping[q] for q in self.observables)

    def expectation(self, theta: ParameterMatrix) -> float:
        state = run_circuit(self.circuit.bind(theta.values))
        return expectation_pauli_z(state, self.observable_positions)

    def dump(self) -> str:
        """Stable text form: qubit map, observable positions, one gate per line."""
        lines = [
            "qubits: " + " ".join(f"{q}->{c}" for c, q in enumerate(self.qubits)),
            "observables: " + " ".join(str(p) for p in self.observable_positions),
        ]
        for g in self.circuit.gates:
            line = f"{g.kind.value} " + " ".join(str(q) for q in g.qubits)
            if g.param_coord is not None:
                line += f" theta[{g.param_coord[0]},{g.param_coord[1]}]"
            lines.append(line)
        return "\n".join(lines) + "\n"


def loose_circuit(spec: AnsatzSpec, cone: LightCone) -> Circuit:
    """The ansatz template filtered to the light cone, before tightening."""
    L = spec.layers
    kept = []
    block = 0
    previous_was_cz = False
    for g in ansatz_template(spec).gates:
        if g.kind is GateKind.CZ:
            if not previous_was_cz:
                block += 1
            previous_was_cz = True
            if g.qubits in cone.entanglers_at(L - block + 1):
                kept.append(g)
            continue
        previous_was_cz = False
        m = g.param_coord[1]
        radius = L if m == 0 else L - m + 1
        if g.qubits[0] in cone.qubits_at(radius):
            kept.append(g)
    return Circuit(spec.n, tuple(kept))


def tighten(c: Circuit, observables: Iterable[int]) -> Circuit:
    """Backward causal sweep keeping only gates inside the observable's support."""
    support = set(observables)
    kept = []
    for g in reversed(c.gates):
        if not support.intersection(g.qubits):
            continue
        kept.append(g)
        if g.kind.arity == 2:
            support.update(g.qubits)
    kept.reverse()
    return Circuit(c.n_qubits, tuple(kept))


def split_components(c: Circuit, observables: Sequence[int]) -> List[Subcircuit]:
    """Connected components of the circuit's CZ graph that hold an observable, ordered by smallest qubit."""
    graph = nx.Graph()
    graph.add_nodes_from(observables)
    for g in c.gates:
        graph.add_nodes_from(g.qubits)
        if g.kind.arity == 2:
            graph.add_edge(*g.qubits)

    subs = []
    for component in sorted(nx.connected_components(graph), key=min):
        obs = tuple(q for q in observables if q in component)
        if not obs:
            logger.debug(f"Dropping component {sorted(component)} with no observable")
            continue
        qubits = tuple(sorted(component))
        mapping = {q: k for k, q in enumerate(qubits)}
        gates = tuple(g.relabel(mapping) for g in c.gates if g.qubits[0] in component)
        subs.append(Subcircuit(qubits=qubits, circuit=Circuit(len(qubits), gates), observables=obs))
    return subs


def build_observable_subcircuits(spec: AnsatzSpec, observables: Sequence[int],
                                 tighten_cone: bool = True) -> List[Subcircuit]:
    """Subcircuits for the Z-string on ``observables`` (any locality)."""
    cone = observable_cone(observables, spec.n, spec.layers, spec.entanglement)
    c = loose_circuit(spec, cone)
    if tighten_cone:
        c = tighten(c, cone.observables)
    return split_components(c, cone.observables)


def build_subcircuits(g: MaxCutInstance, spec: AnsatzSpec, edge: Tuple[int, int],
                      tighten_cone: bool = True) -> List[Subcircuit]:
    """
    Subcircuits evaluating <Z_i Z_j> for one edge.

    Raises:
        InvalidArgumentError: ansatz width differs from the instance
        UnsupportedError: full entanglement
    """
    if spec.n != g.n:
        raise InvalidArgumentError(f"Ansatz has {spec.n} qubits but the instance has {g.n} vertices")
    i, j = edge
    if i == j:
        raise InvalidArgumentError(f"Edge endpoints must differ, got {edge}")
    return build_observable_subcircuits(spec, (i, j), tighten_cone)


def subcircuit_expectation(subs: Sequence[Subcircuit], theta: ParameterMatrix) -> float:
    """Product of per-component Z-string expectations."""
    value = 1.0
    for sub in subs:
        value *= sub.expectation(theta)
    return value


def param_coords(subs: Iterable[Subcircuit]) -> set:
    coords = set()
    for sub in subs:
        coords |= sub.circuit.param_coords()
    return coords
