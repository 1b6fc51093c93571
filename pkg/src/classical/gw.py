"""
Goemans-Williamson Max-Cut baseline.

The semidefinite relaxation max sum_edges (1 - <v_u, v_v>) / 2 over unit
vectors is solved in low-rank (Burer-Monteiro) form: n unit vectors in R^r,
r = ceil(sqrt(2n)) + 1, improved by projected gradient ascent on the product
of spheres with Armijo backtracking. Rows are re-normalized after every step.
Cuts come from random-hyperplane rounding.
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import InvalidArgumentError
from ..logging_config import get_logger
from ..problems import Assignment, MaxCutInstance
from ..seeding import numpy_rng

logger = get_logger(__name__)

DEFAULT_MAX_ITERS = 5000
DEFAULT_GRAD_TOL = 1e-6
_ARMIJO_C = 1e-4
_MAX_STEP = 1e3
_MIN_STEP = 1e-12


@dataclass(frozen=True)
class GwEmbedding:
    vectors: np.ndarray  # (n, rank), unit rows
    rank: int
    residual: float  # Frobenius norm of the projected gradient
    value: float  # relaxation objective at ``vectors``
    iterations: int
    converged: bool


@dataclass(frozen=True)
class GwResult:
    best_cut: int
    best_assignment: Assignment
    trials: int
    cuts: Tuple[int, ...]


def gw_rank(n: int) -> int:
    return math.ceil(math.sqrt(2 * n)) + 1


def _normalize_rows(v: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(v, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return v / norms


def _adjacency(g: MaxCutInstance) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    e = g.edge_array
    a[e[:, 0], e[:, 1]] = 1.0
    a[e[:, 1], e[:, 0]] = 1.0
    return a


def _inner_sum(a: np.ndarray, v: np.ndarray) -> float:
    """Sum over edges of <v_u, v_v>."""
    return 0.5 * float(np.sum(a * (v @ v.T)))


def _projected_gradient(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Gradient of the edge inner-product sum, projected onto the sphere tangents."""
    grad = a @ v
    radial = np.sum(grad * v, axis=1, keepdims=True)
    return grad - radial * v


def gw_embed(g: MaxCutInstance, seed: int, max_iters: int = DEFAULT_MAX_ITERS,
             tol: float = DEFAULT_GRAD_TOL) -> GwEmbedding:
    """
    Low-rank solution of the Max-Cut semidefinite relaxation.

    Raises:
        InvalidArgumentError: the instance has no edges
    """
    if g.num_edges == 0:
        raise InvalidArgumentError("GW relaxation needs at least one edge")

    rank = gw_rank(g.n)
    a = _adjacency(g)
    v = _normalize_rows(numpy_rng(seed).standard_normal((g.n, rank)))
    h = _inner_sum(a, v)
    step = 1.0
    residual = np.inf
    iteration = 0
    for iteration in range(1, max_iters + 1):
        pg = _projected_gradient(a, v)
        residual = float(np.linalg.norm(pg))
        if residual <= tol:
            break
        sq = residual ** 2
        # Minimizing the inner-product sum maximizes the relaxation
        while True:
            candidate = _normalize_rows(v - step * pg)
            h_new = _inner_sum(a, candidate)
            if h_new <= h - _ARMIJO_C * step * sq or step < _MIN_STEP:
                break
            step *= 0.5
        v, h = candidate, h_new
        step = min(step * 2.0, _MAX_STEP)

    converged = residual <= tol
    value = 0.5 * g.num_edges - 0.5 * h
    if not converged:
        logger.warning(
            f"GW embedding for {g.instance_id} stopped after {iteration} iterations "
            f"with residual {residual:.2e}",
            extra={"instance_id": g.instance_id},
        )
    else:
        logger.debug(f"GW embedding for {g.instance_id}: value {value:.6f} after {iteration} iterations")
    return GwEmbedding(vectors=v, rank=rank, residual=residual, value=value,
                       iterations=iteration, converged=converged)


def gw_round(emb: GwEmbedding, g: MaxCutInstance, trials: int, seed: int) -> GwResult:
    """
    Best of ``trials`` random-hyperplane roundings.

    Each trial draws a standard Gaussian normal in R^rank; vertex k goes to side
    1 when its vector has a negative inner product with the normal.
    """
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    if emb.vectors.shape[0] != g.n:
        raise InvalidArgumentError(f"Embedding has {emb.vectors.shape[0]} vectors for n={g.n}")
    normals = numpy_rng(seed).standard_normal((trials, emb.rank))
    sides = (emb.vectors @ normals.T < 0).astype(np.int64)  # (n, trials)
    e = g.edge_array
    cuts = np.sum(sides[e[:, 0]] ^ sides[e[:, 1]], axis=0) if g.num_edges else np.zeros(trials, dtype=np.int64)
    best = int(np.argmax(cuts))
    return GwResult(
        best_cut=int(cuts[best]),
        best_assignment=Assignment(tuple(int(b) for b in sides[:, best])),
        trials=trials,
        cuts=tuple(int(c) for c in cuts),
    )
