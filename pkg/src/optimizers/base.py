"""
Optimizer interface and evaluation bookkeeping.

Every optimizer minimizes through a ``TrackedObjective`` that counts calls,
keeps the best point seen, and stops the run once the evaluation budget is
spent. The best point is what gets reported, so a run never returns a value
worse than its starting point.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..errors import InvalidArgumentError

# Evaluation budget defaults: 200 per parameter, capped
EVALS_PER_PARAMETER = 200
MAX_DEFAULT_EVALS = 10_000

Objective = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class OptimizerConfig:
    method: str = "cobyla"
    max_evals: Optional[int] = None
    initial_step: float = 0.5
    tolerance: float = 1e-4

    def __post_init__(self):
        if self.max_evals is not None and self.max_evals < 1:
            raise InvalidArgumentError(f"max_evals must be >= 1, got {self.max_evals}")
        if self.tolerance <= 0:
            raise InvalidArgumentError(f"tolerance must be > 0, got {self.tolerance}")
        if self.initial_step <= 0:
            raise InvalidArgumentError(f"initial_step must be > 0, got {self.initial_step}")

    def budget(self, dim: int) -> int:
        if self.max_evals is not None:
            return self.max_evals
        return min(EVALS_PER_PARAMETER * dim, MAX_DEFAULT_EVALS)


@dataclass
class OptimizeResult:
    x: np.ndarray
    fun: float
    evals: int
    budget_exhausted: bool
    method: str
    message: str = ""


class BudgetExhausted(Exception):
    """Raised inside the objective to stop an optimizer at its budget."""


class TrackedObjective:
    def __init__(self, func: Objective, budget: int):
        self.func = func
        self.budget = budget
        self.evals = 0
        self.best_x: Optional[np.ndarray] = None
        self.best_f = np.inf

    def __call__(self, x: np.ndarray) -> float:
        if self.evals >= self.budget:
            raise BudgetExhausted()
        self.evals += 1
        value = float(self.func(np.asarray(x, dtype=np.float64)))
        if self.best_x is None or value < self.best_f:
            self.best_f = value
            self.best_x = np.array(x, dtype=np.float64, copy=True)
        return value


class Optimizer(ABC):
    """Derivative-free local minimizer."""

    name = "base"

    def minimize(self, func: Objective, x0: np.ndarray, cfg: OptimizerConfig) -> OptimizeResult:
        x0 = np.asarray(x0, dtype=np.float64).reshape(-1)
        if x0.size < 1:
            raise InvalidArgumentError("Cannot optimize over zero parameters")
        tracked = TrackedObjective(func, cfg.budget(x0.size))
        message = ""
        try:
            message = self._run(tracked, x0, cfg)
        except BudgetExhausted:
            message = "evaluation budget exhausted"
        if tracked.best_x is None:
            tracked(x0)
        return OptimizeResult(
            x=tracked.best_x,
            fun=tracked.best_f,
            evals=tracked.evals,
            budget_exhausted=tracked.evals >= tracked.budget,
            method=self.name,
            message=message,
        )

    @abstractmethod
    def _run(self, objective: TrackedObjective, x0: np.ndarray, cfg: OptimizerConfig) -> str:
        """Run the method; return its termination message."""
