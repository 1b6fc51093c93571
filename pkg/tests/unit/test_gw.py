"""
Unit tests for the Goemans-Williamson baseline.
"""
import math

import numpy as np
import pytest

from src.classical import gw_embed, gw_rank, gw_round
from src.errors import InvalidArgumentError
from src.problems import cut_value, max_cut_bruteforce


@pytest.mark.unit
class TestGwEmbed:
    """Tests for the low-rank relaxation."""

    def test_rank(self):
        assert gw_rank(10) == 6
        assert gw_rank(2) == 3

    def test_rows_are_unit_vectors(self, ring6):
        emb = gw_embed(ring6, seed=0)
        assert np.allclose(np.linalg.norm(emb.vectors, axis=1), 1.0)

    def test_bipartite_relaxation_is_tight(self, ring6):
        emb = gw_embed(ring6, seed=0)
        assert emb.converged
        assert emb.value == pytest.approx(6.0, abs=1e-4)

    def test_odd_cycle_relaxation_value(self, make_instance):
        """Five-cycle optimum puts neighbours 4pi/5 apart."""
        emb = gw_embed(make_instance(5), seed=1)
        assert emb.value == pytest.approx(5 * (1 - math.cos(4 * math.pi / 5)) / 2, abs=1e-4)

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_relaxation_bounds_optimum(self, make_instance, seed):
        g = make_instance(10, kind="gnp", p=0.5, seed=seed)
        opt, _ = max_cut_bruteforce(g)
        emb = gw_embed(g, seed=seed)
        assert emb.value >= opt - 1e-4
        assert emb.value <= g.num_edges + 1e-9

    def test_no_edges(self, make_instance):
        with pytest.raises(InvalidArgumentError):
            gw_embed(make_instance(4, edges=[]), seed=0)


@pytest.mark.unit
class TestGwRound:
    """Tests for random-hyperplane rounding."""

    def test_cuts_are_consistent(self, make_instance):
        g = make_instance(10, kind="gnp", p=0.5, seed=5)
        opt, _ = max_cut_bruteforce(g)
        result = gw_round(gw_embed(g, seed=5), g, trials=24, seed=8)
        assert len(result.cuts) == 24
        assert result.best_cut == max(result.cuts)
        assert result.best_cut == cut_value(g, result.best_assignment)
        assert result.best_cut <= opt

    def test_bipartite_rounds_to_optimum(self, ring6):
        result = gw_round(gw_embed(ring6, seed=0), ring6, trials=4, seed=0)
        assert result.best_cut == 6

    def test_deterministic(self, make_instance):
        g = make_instance(8, kind="regular", d=3, seed=1)
        emb = gw_embed(g, seed=2)
        assert gw_round(emb, g, 10, seed=3) == gw_round(emb, g, 10, seed=3)

    def test_invalid_trials(self, ring6):
        with pytest.raises(InvalidArgumentError):
            gw_round(gw_embed(ring6, seed=0), ring6, trials=0, seed=0)

    def test_embedding_size_mismatch(self, ring6, make_instance):
        with pytest.raises(InvalidArgumentError):
            gw_round(gw_embed(ring6, seed=0), make_instance(5), trials=1, seed=0)


GW_QUALITY_INSTANCES = (
    [("gnp", n, seed) for n in (10, 14, 18) for seed in range(9)]
    + [("regular", n, seed) for n in (12, 16, 20) for seed in range(8)]
)


@pytest.mark.unit
@pytest.mark.slow
class TestGwQuality:
    """Relaxation bound and best-of-24 rounding quality over small instances."""

    def test_bound_and_mean_ratio(self, make_instance):
        ratios = []
        for kind, n, seed in GW_QUALITY_INSTANCES:
            g = make_instance(n, kind=kind, p=0.5, d=3, seed=seed)
            opt, _ = max_cut_bruteforce(g)
            emb = gw_embed(g, seed=seed)
            result = gw_round(emb, g, trials=24, seed=seed)
            assert result.best_cut <= opt <= emb.value + 1e-4
            ratios.append(result.best_cut / opt)
        assert len(ratios) >= 50
        assert np.mean(ratios) >= 0.87
