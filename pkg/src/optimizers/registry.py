"""
Optimizer registry.

To add a method: subclass ``Optimizer``, give it a ``name``, and add it to
OPTIMIZER_CLASSES.
"""
from typing import Dict, Type

import numpy as np

from ..errors import InvalidArgumentError
from ..logging_config import get_logger
from .base import Objective, OptimizeResult, Optimizer, OptimizerConfig
from .scipy_methods import CobylaOptimizer, NelderMeadOptimizer

logger = get_logger(__name__)

OPTIMIZER_CLASSES: Dict[str, Type[Optimizer]] = {
    "cobyla": CobylaOptimizer,
    "nelder-mead": NelderMeadOptimizer,
}


def get_optimizer(name: str) -> Optimizer:
    if name not in OPTIMIZER_CLASSES:
        raise InvalidArgumentError(
            f"Unknown optimizer '{name}', expected one of {sorted(OPTIMIZER_CLASSES)}"
        )
    return OPTIMIZER_CLASSES[name]()


def minimize(func: Objective, x0: np.ndarray, cfg: OptimizerConfig) -> OptimizeResult:
    """
    Derivative-free local minimization of ``func`` from ``x0``.

    Budget exhaustion is reported through ``result.budget_exhausted``.
    """
    result = get_optimizer(cfg.method).minimize(func, x0, cfg)
    if result.budget_exhausted:
        logger.debug(f"{cfg.method} stopped at its budget of {result.evals} evaluations")
    return result
