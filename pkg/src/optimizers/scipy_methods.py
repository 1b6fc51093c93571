"""scipy-backed derivative-free methods."""
import numpy as np
import scipy.optimize

from .base import Optimizer, OptimizerConfig, TrackedObjective


class CobylaOptimizer(Optimizer):
    """
    Linear-approximation trust region (COBYLA).

    ``initial_step`` is the initial trust-region radius and ``tolerance`` its
    final value.
    """

    name = "cobyla"

    def _run(self, objective: TrackedObjective, x0: np.ndarray, cfg: OptimizerConfig) -> str:
        res = scipy.optimize.minimize(
            fun=objective,
            x0=x0,
            method="COBYLA",
            options={"maxiter": objective.budget, "rhobeg": cfg.initial_step},
            tol=cfg.tolerance,
        )
        return str(res.message)


class NelderMeadOptimizer(Optimizer):
    """Nelder-Mead simplex starting from x0 and x0 + initial_step * e_i."""

    name = "nelder-mead"

    def _run(self, objective: TrackedObjective, x0: np.ndarray, cfg: OptimizerConfig) -> str:
        simplex = np.vstack([x0, x0 + cfg.initial_step * np.eye(x0.size)])
        res = scipy.optimize.minimize(
            fun=objective,
            x0=x0,
            method="Nelder-Mead",
            options={
                "maxfev": objective.budget,
                "maxiter": objective.budget,
                # both tolerances have to be met for Nelder-Mead to stop
                "xatol": cfg.tolerance,
                "fatol": cfg.tolerance,
                "initial_simplex": simplex,
            },
        )
        return str(res.message)
