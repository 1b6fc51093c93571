"""
Evaluator registry.

Tags:
  noiseless-lcc   exact, per-edge light-cone subcircuits
  noiseless-full  exact, full-width statevector (n <= 20)
  noisy-lcc       trajectory estimates of the light-cone subcircuits
  noisy-full      trajectory estimates of the full ansatz (n <= 15)
"""
from typing import Dict, Optional, Type

from ..ansatz import AnsatzSpec
from ..errors import InvalidArgumentError
from ..noise import BackendSpec, NoisySimConfig
from ..problems import MaxCutInstance
from .base import Evaluator
from .noiseless import NoiselessFullEvaluator, NoiselessLccEvaluator
from .noisy import NoisyFullEvaluator, NoisyLccEvaluator

EVALUATOR_CLASSES: Dict[str, Type[Evaluator]] = {
    "noiseless-lcc": NoiselessLccEvaluator,
    "noiseless-full": NoiselessFullEvaluator,
    "noisy-lcc": NoisyLccEvaluator,
    "noisy-full": NoisyFullEvaluator,
}


def make_evaluator(tag: str, g: MaxCutInstance, spec: AnsatzSpec,
                   backend: Optional[BackendSpec] = None,
                   sim: Optional[NoisySimConfig] = None,
                   common_random_numbers: bool = True) -> Evaluator:
    """
    Build the evaluator registered under ``tag``.

    Raises:
        InvalidArgumentError: unknown tag, or a noisy tag without a backend
    """
    if tag not in EVALUATOR_CLASSES:
        raise InvalidArgumentError(f"Unknown evaluator '{tag}', expected one of {sorted(EVALUATOR_CLASSES)}")
    cls = EVALUATOR_CLASSES[tag]
    if not cls.noisy:
        return cls(g, spec)
    if backend is None:
        raise InvalidArgumentError(f"Evaluator '{tag}' needs a backend")
    return cls(g, spec, backend, sim or NoisySimConfig(), common_random_numbers)
