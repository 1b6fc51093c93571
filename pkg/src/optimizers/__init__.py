"""Derivative-free optimizers."""
from .base import OptimizeResult, Optimizer, OptimizerConfig
from .registry import OPTIMIZER_CLASSES, get_optimizer, minimize

__all__ = [
    "OptimizeResult",
    "Optimizer",
    "OptimizerConfig",
    "OPTIMIZER_CLASSES",
    "get_optimizer",
    "minimize",
]
