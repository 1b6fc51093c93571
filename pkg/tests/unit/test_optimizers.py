"""
Unit tests for the derivative-free optimizers.
"""
import numpy as np
import pytest

from src.errors import InvalidArgumentError
from src.optimizers import OPTIMIZER_CLASSES, OptimizerConfig, get_optimizer, minimize


def _bowl(x: np.ndarray) -> float:
    return float(np.sum((x - 1.0) ** 2))


def _rosenbrock(x: np.ndarray) -> float:
    return float(100.0 * (x[1] - x[0] ** 2) ** 2 + (1.0 - x[0]) ** 2)


@pytest.mark.unit
class TestOptimizerConfig:
    """Tests for budgets and validation."""

    def test_default_budget_scales_with_dimension(self):
        assert OptimizerConfig().budget(5) == 1000

    def test_default_budget_is_capped(self):
        assert OptimizerConfig().budget(100) == 10_000

    def test_explicit_budget(self):
        assert OptimizerConfig(max_evals=7).budget(100) == 7

    @pytest.mark.parametrize("kwargs", [{"max_evals": 0}, {"tolerance": 0.0}, {"initial_step": -1.0}])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidArgumentError):
            OptimizerConfig(**kwargs)


@pytest.mark.unit
class TestMinimize:
    """Tests for the registered methods."""

    @pytest.mark.parametrize("method", sorted(OPTIMIZER_CLASSES))
    def test_quadratic_bowl(self, method):
        result = minimize(_bowl, np.zeros(3), OptimizerConfig(method=method, tolerance=1e-6))
        assert result.method == method
        assert result.fun < 1e-3
        assert np.allclose(result.x, 1.0, atol=3e-2)
        assert not result.budget_exhausted

    @pytest.mark.parametrize("method", sorted(OPTIMIZER_CLASSES))
    def test_budget_flag(self, method):
        result = minimize(_bowl, np.zeros(4), OptimizerConfig(method=method, max_evals=10))
        assert result.evals == 10
        assert result.budget_exhausted

    @pytest.mark.parametrize("method", sorted(OPTIMIZER_CLASSES))
    def test_never_worse_than_start(self, method):
        x0 = np.array([0.3, -0.2])
        result = minimize(_bowl, x0, OptimizerConfig(method=method, max_evals=5))
        assert result.fun <= _bowl(x0)

    def test_rosenbrock(self):
        result = minimize(_rosenbrock, np.array([-1.2, 1.0]),
                          OptimizerConfig(method="nelder-mead", max_evals=2000, tolerance=1e-8))
        assert result.evals <= 2000
        assert result.fun <= 1e-3
        assert result.fun == pytest.approx(_rosenbrock(result.x))

    def test_unknown_method(self):
        with pytest.raises(InvalidArgumentError):
            get_optimizer("bfgs")

    def test_zero_parameters(self):
        with pytest.raises(InvalidArgumentError):
            minimize(_bowl, np.zeros(0), OptimizerConfig())
