"""
Dense reference implementations for tests.

Operators are built as Kronecker products over the whole register with
qubit 0 as the least-significant factor (the rightmost one), matching the
simulator's basis-index convention.
"""
from functools import reduce
from math import cos, sin

import numpy as np

from src.ansatz import AnsatzSpec, ParameterMatrix, entangler_pairs

I2 = np.eye(2, dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def ry_matrix(angle: float) -> np.ndarray:
    c, s = cos(angle / 2), sin(angle / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def embed_1q(op: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """``op`` on ``qubit``, identity elsewhere, as a 2^n x 2^n matrix."""
    factors = [op if q == qubit else I2 for q in reversed(range(n))]
    return reduce(np.kron, factors)


def cz_matrix(a: int, b: int, n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    both = ((idx >> a) & 1) & ((idx >> b) & 1)
    return np.diag(1 - 2 * both).astype(np.complex128)


def cnot_matrix(control: int, target: int, n: int) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=np.complex128)
    for b in range(dim):
        out = b ^ (1 << target) if (b >> control) & 1 else b
        m[out, b] = 1.0
    return m


def zz_operator(i: int, j: int, n: int) -> np.ndarray:
    return embed_1q(Z, i, n) @ embed_1q(Z, j, n)


def ansatz_unitary(spec: AnsatzSpec, theta: ParameterMatrix) -> np.ndarray:
    n = spec.n
    u = np.eye(1 << n, dtype=np.complex128)

    def ry_column(m):
        col = np.eye(1 << n, dtype=np.complex128)
        for k in range(n):
            col = embed_1q(ry_matrix(theta.values[k, m]), k, n) @ col
        return col

    u = ry_column(0) @ u
    for m in range(1, spec.layers + 1):
        for a, b in entangler_pairs(n, spec.entanglement):
            u = cz_matrix(a, b, n) @ u
        u = ry_column(m) @ u
    return u


def oracle_state(spec: AnsatzSpec, theta: ParameterMatrix) -> np.ndarray:
    psi0 = np.zeros(1 << spec.n, dtype=np.complex128)
    psi0[0] = 1.0
    return ansatz_unitary(spec, theta) @ psi0


def oracle_expectation(edges, spec: AnsatzSpec, theta: ParameterMatrix) -> float:
    """Max-Cut expectation sum over edges of (1 - <Z_i Z_j>) / 2."""
    psi = oracle_state(spec, theta)
    total = 0.0
    for i, j in edges:
        zz = float(np.real(np.vdot(psi, zz_operator(i, j, spec.n) @ psi)))
        total += 0.5 * (1.0 - zz)
    return total


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, atol: float = 1e-10) -> bool:
    """True when a = e^{i phi} b for some phase."""
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    k = int(np.argmax(np.abs(b)))
    if abs(b[k]) < atol:
        return np.allclose(a, b, atol=atol)
    phase = a[k] / b[k]
    return abs(abs(phase) - 1.0) < 1e-8 and np.allclose(a, phase * b, atol=atol)
