"""
VQE driver: random restarts, optimization of -E(theta), approximation ratios.

Seed tree per run: ``derive_seed(seed, instance_id, "trial", t)`` seeds trial t;
the initial angles, noisy trajectories and readout sampling of that trial are
all derived from it.
"""
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .ansatz import AnsatzSpec, ParameterMatrix
from .errors import InvalidArgumentError
from .evaluators import Evaluator
from .logging_config import get_logger
from .optimizers import OptimizerConfig, minimize
from .problems import Assignment, MaxCutInstance
from .seeding import derive_seed, numpy_rng

logger = get_logger(__name__)

DEFAULT_TRIALS = 24
DEFAULT_SAMPLE_SHOTS = 1024

EvaluatorFactory = Callable[[int], Evaluator]


@dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: int
    theta_star: ParameterMatrix
    expectation: float
    ar: Optional[float]
    evals_used: int
    budget_exhausted: bool
    best_sampled_cut: int
    best_assignment: Assignment
    wall_time: float


@dataclass
class VqeRun:
    trials: List[TrialResult] = field(default_factory=list)

    @property
    def best(self) -> TrialResult:
        """Highest-AR trial (highest expectation when no optimum is known); first wins ties."""
        if not self.trials:
            raise InvalidArgumentError("No trials were run")
        return max(self.trials, key=lambda t: (t.ar if t.ar is not None else t.expectation, -t.trial))


def approximation_ratio(expectation: float, optimum: float) -> float:
    """expectation / optimum; the optimum must be positive."""
    if optimum <= 0:
        raise InvalidArgumentError(f"Optimum must be positive, got {optimum}")
    return expectation / optimum


def run_trial(evaluator: Evaluator, trial: int, seed: int, cfg: OptimizerConfig,
              optimum: Optional[float] = None, shots: int = DEFAULT_SAMPLE_SHOTS) -> TrialResult:
    """One random restart: uniform initial angles, minimize -E, re-evaluate and read out."""
    spec = evaluator.spec
    started = time.perf_counter()
    x0 = ParameterMatrix.random(spec, numpy_rng(derive_seed(seed, "init"))).to_vector()

    def objective(x: np.ndarray) -> float:
        return -evaluator(ParameterMatrix.from_vector(x, spec))

    result = minimize(objective, x0, cfg)
    theta_star = ParameterMatrix.from_vector(result.x, spec)
    expectation = -result.fun
    best_cut, best_assignment = evaluator.best_cut(theta_star, shots, derive_seed(seed, "sample"))
    ar = approximation_ratio(expectation, optimum) if optimum else None
    elapsed = time.perf_counter() - started
    logger.debug(
        f"Trial {trial}: E={expectation:.6f} evals={result.evals} best_cut={best_cut}",
        extra={"instance_id": evaluator.instance.instance_id, "mode": evaluator.tag, "trial": trial},
    )
    return TrialResult(
        trial=trial,
        seed=seed,
        theta_star=theta_star,
        expectation=expectation,
        ar=ar,
        evals_used=result.evals,
        budget_exhausted=result.budget_exhausted,
        best_sampled_cut=best_cut,
        best_assignment=best_assignment,
        wall_time=elapsed,
    )


def vqe_run(g: MaxCutInstance, make: EvaluatorFactory, cfg: OptimizerConfig,
            trials: int = DEFAULT_TRIALS, seed: int = 0, optimum: Optional[float] = None,
            shots: int = DEFAULT_SAMPLE_SHOTS) -> VqeRun:
    """
    Run ``trials`` independent restarts.

    Args:
        make: builds the evaluator for a trial seed (noisy evaluators seed their
            trajectories from it)
        optimum: Max-Cut value used as the AR denominator, if known
    """
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    run = VqeRun()
    for t in range(trials):
        trial_seed = derive_seed(seed, g.instance_id, "trial", t)
        run.trials.append(run_trial(make(trial_seed), t, trial_seed, cfg, optimum, shots))
    best = run.best
    logger.info(
        f"{g.instance_id}: best E={best.expectation:.4f}"
        + (f" AR={best.ar:.4f}" if best.ar is not None else "")
        + f" over {trials} trials",
        extra={"instance_id": g.instance_id},
    )
    return run


def layer_percentages(ars_by_layer: Dict[int, Sequence[float]], threshold: float) -> Dict[int, float]:
    """Percentage of trials with AR >= threshold, per layer count."""
    out = {}
    for layers, ars in sorted(ars_by_layer.items()):
        ars = list(ars)
        out[layers] = 100.0 * sum(1 for a in ars if a >= threshold) / len(ars) if ars else 0.0
    return out


def layer_study(instances: Sequence[MaxCutInstance], layer_list: Sequence[int],
                make: Callable[[MaxCutInstance, AnsatzSpec, int], Evaluator],
                cfg: OptimizerConfig, optima: Dict[str, float],
                trials: int = DEFAULT_TRIALS, threshold: float = 0.99,
                seed: int = 0) -> Dict[int, float]:
    """
    Share of trials reaching ``threshold`` AR for each layer count, pooled over
    instances.

    Args:
        make: builds a noiseless evaluator for (instance, ansatz, trial seed)
        optima: Max-Cut value per instance id
    """
    ars_by_layer: Dict[int, List[float]] = {}
    for layers in layer_list:
        pooled: List[float] = []
        for g in instances:
            spec = AnsatzSpec(n=g.n, layers=layers)
            run = vqe_run(g, lambda s, g=g, spec=spec: make(g, spec, s), cfg, trials,
                          derive_seed(seed, "layers", layers), optima[g.instance_id])
            pooled.extend(t.ar for t in run.trials)
        ars_by_layer[layers] = pooled
    return layer_percentages(ars_by_layer, threshold)
