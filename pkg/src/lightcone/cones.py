"""
Light-cone sets for Z-string observables on the two-local ansatz.

For one observable qubit i, the radius-m set is every qubit within distance m
of i (ring distance for circular entanglement, line distance for linear) and
the radius-m entanglers are the CZ pairs of one block whose two endpoints both
lie in that set. Multi-qubit observables take the union over their qubits.

Radius m corresponds to the m-th entangling block counted backwards from the
measurement, so block m of the circuit sits at radius L - m + 1.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from ..ansatz import Entanglement, entangler_pairs
from ..errors import InvalidArgumentError, UnsupportedError

Pair = Tuple[int, int]


def qubit_distance(a: int, b: int, n: int, entanglement: Entanglement) -> int:
    d = abs(a - b)
    if entanglement is Entanglement.CIRCULAR:
        return min(d, n - d)
    return d


@dataclass(frozen=True)
class LightCone:
    observables: Tuple[int, ...]
    n: int
    layers: int
    entanglement: Entanglement
    # sets[r] is the qubit set at radius r, r = 0..L (radius 0 = observables)
    sets: Tuple[FrozenSet[int], ...]
    # entanglers[r] for r = 1..L; entanglers[0] is empty
    entanglers: Tuple[FrozenSet[Pair], ...]

    @property
    def locality(self) -> int:
        return len(self.observables)

    def qubits_at(self, radius: int) -> FrozenSet[int]:
        return self.sets[radius]

    def entanglers_at(self, radius: int) -> FrozenSet[Pair]:
        return self.entanglers[radius]

    @property
    def size(self) -> int:
        """Qubits needed by the unsplit subcircuit."""
        return len(self.sets[self.layers])


def _single_cone(i: int, n: int, layers: int, entanglement: Entanglement):
    pairs = entangler_pairs(n, entanglement)
    sets, ents = [], [frozenset()]
    for r in range(layers + 1):
        s = frozenset(q for q in range(n) if qubit_distance(q, i, n, entanglement) <= r)
        sets.append(s)
        if r > 0:
            ents.append(frozenset(p for p in pairs if p[0] in s and p[1] in s))
    return sets, ents


def observable_cone(observables: Iterable[int], n: int, layers: int,
                    entanglement: Entanglement = Entanglement.CIRCULAR) -> LightCone:
    """
    Light cone of a Z-string on ``observables``.

    Raises:
        InvalidArgumentError: repeated or out-of-range observable qubits
        UnsupportedError: full entanglement (its cone is the whole register)
    """
    observables = tuple(int(q) for q in observables)
    entanglement = Entanglement(entanglement)
    if entanglement is Entanglement.FULL:
        raise UnsupportedError("Light-cone cancellation is not possible with full entanglement")
    if not observables:
        raise InvalidArgumentError("At least one observable qubit is required")
    if len(set(observables)) != len(observables):
        raise InvalidArgumentError(f"Observable qubits must be distinct, got {observables}")
    for q in observables:
        if not 0 <= q < n:
            raise InvalidArgumentError(f"Observable qubit {q} out of range for n={n}")
    if layers < 1:
        raise InvalidArgumentError(f"layers must be >= 1, got {layers}")

    sets = [frozenset()] * (layers + 1)
    ents = [frozenset()] * (layers + 1)
    for q in observables:
        q_sets, q_ents = _single_cone(q, n, layers, entanglement)
        sets = [a | b for a, b in zip(sets, q_sets)]
        ents = [a | b for a, b in zip(ents, q_ents)]
    return LightCone(observables, n, layers, entanglement, tuple(sets), tuple(ents))


def cone_sets(i: int, j: int, n: int, layers: int,
              entanglement: Entanglement = Entanglement.CIRCULAR) -> LightCone:
    """Light cone of Z_i Z_j."""
    if i == j:
        raise InvalidArgumentError(f"Edge endpoints must differ, got ({i}, {j})")
    return observable_cone((i, j), n, layers, entanglement)


def max_qubits(k: int, layers: int) -> int:
    """Upper bound 2kL + 1 on the qubits of a k-local observable's subcircuit."""
    if k < 1 or layers < 1:
        raise InvalidArgumentError(f"k and layers must be >= 1, got k={k}, layers={layers}")
    return 2 * k * layers + 1
