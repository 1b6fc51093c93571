"""
Unit tests for the Ry/CZ ansatz and the full-circuit Max-Cut expectation.
"""
import numpy as np
import pytest

from src.ansatz import (
    AnsatzSpec,
    Entanglement,
    ParameterMatrix,
    TWO_PI,
    ansatz_template,
    build_ansatz,
    entangler_pairs,
    full_expectation,
    sample_bitstrings,
)
from src.errors import InvalidArgumentError, SizeLimitError
from src.problems import Assignment, MaxCutInstance, cut_value
from src.simulator import GateKind
from tests.utils import oracle_expectation


@pytest.mark.unit
class TestAnsatzSpec:
    """Tests for spec validation and parameter shapes."""

    def test_shape(self):
        spec = AnsatzSpec(n=5, layers=3)
        assert spec.shape == (5, 4)
        assert spec.num_parameters == 20

    def test_entanglement_from_string(self):
        assert AnsatzSpec(n=3, layers=1, entanglement="linear").entanglement is Entanglement.LINEAR

    @pytest.mark.parametrize("n,layers", [(1, 1), (4, 0)])
    def test_invalid_spec(self, n, layers):
        with pytest.raises(InvalidArgumentError):
            AnsatzSpec(n=n, layers=layers)


@pytest.mark.unit
class TestParameterMatrix:
    """Tests for angle wrapping and conversions."""

    def test_angles_wrap_into_range(self):
        theta = ParameterMatrix(np.array([[-0.1, 7.0], [TWO_PI, 0.0]]))
        assert theta.values[0, 0] == pytest.approx(TWO_PI - 0.1)
        assert theta.values[0, 1] == pytest.approx(7.0 - TWO_PI)
        assert theta.values[1, 0] == pytest.approx(0.0)
        assert np.all((theta.values >= 0) & (theta.values < TWO_PI))

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidArgumentError):
            ParameterMatrix(np.array([[np.nan, 0.0]]))

    def test_vector_conversion(self, make_spec):
        spec = make_spec(n=3, layers=2)
        vec = np.linspace(0.1, 0.9, 9)
        theta = ParameterMatrix.from_vector(vec, spec)
        assert theta.shape == (3, 3)
        assert np.allclose(theta.to_vector(), vec)

    def test_vector_wrong_size(self, make_spec):
        with pytest.raises(InvalidArgumentError):
            ParameterMatrix.from_vector(np.zeros(5), make_spec(n=3, layers=1))

    def test_random_is_seeded(self, make_spec, make_theta):
        spec = make_spec(n=4, layers=2)
        assert np.array_equal(make_theta(spec, 3).values, make_theta(spec, 3).values)


@pytest.mark.unit
class TestEntanglerPairs:
    """Tests for CZ block layouts."""

    def test_circular(self):
        assert entangler_pairs(4, Entanglement.CIRCULAR) == [(0, 1), (1, 2), (2, 3), (3, 0)]

    def test_circular_two_qubits_has_single_pair(self):
        assert entangler_pairs(2, Entanglement.CIRCULAR) == [(0, 1)]

    def test_linear(self):
        assert entangler_pairs(4, Entanglement.LINEAR) == [(0, 1), (1, 2), (2, 3)]

    def test_full(self):
        assert len(entangler_pairs(5, Entanglement.FULL)) == 10


@pytest.mark.unit
class TestAnsatzCircuit:
    """Tests for circuit construction."""

    def test_template_layout(self, make_spec):
        spec = make_spec(n=5, layers=3)
        c = ansatz_template(spec)
        assert c.count(GateKind.RY) == 5 * 4
        assert c.count(GateKind.CZ) == 5 * 3
        assert c.param_coords() == {(k, m) for k in range(5) for m in range(4)}

    def test_first_column_then_blocks(self, make_spec):
        c = ansatz_template(make_spec(n=3, layers=1))
        kinds = [g.kind for g in c]
        assert kinds[:3] == [GateKind.RY] * 3
        assert kinds[3:6] == [GateKind.CZ] * 3
        assert kinds[6:] == [GateKind.RY] * 3

    def test_build_checks_shape(self, make_spec, make_theta):
        with pytest.raises(InvalidArgumentError):
            build_ansatz(make_spec(n=4, layers=1), make_theta(make_spec(n=4, layers=2)))


@pytest.mark.unit
class TestFullExpectation:
    """Tests for the full-state Max-Cut expectation."""

    @pytest.mark.parametrize("bits", ["010101", "000000", "011001", "110100"])
    def test_basis_encoding_gives_cut_value(self, ring6, make_spec, bits):
        spec = make_spec(n=6, layers=2)
        a = Assignment.from_string(bits)
        theta = ParameterMatrix.basis_encoding(spec, a.bits)
        assert full_expectation(ring6, spec, theta) == pytest.approx(cut_value(ring6, a), abs=1e-9)

    def test_zero_angles_cut_nothing(self, ring6, make_spec, zero_theta):
        spec = make_spec(n=6, layers=1)
        assert full_expectation(ring6, spec, zero_theta(spec)) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("entanglement", ["circular", "linear", "full"])
    @pytest.mark.parametrize("layers", [1, 2, 3])
    def test_matches_dense_oracle(self, make_instance, make_spec, make_theta, entanglement, layers):
        g = make_instance(5, kind="gnp", p=0.6, seed=layers)
        spec = make_spec(n=5, layers=layers, entanglement=entanglement)
        theta = make_theta(spec, seed=11 * layers)
        assert full_expectation(g, spec, theta) == pytest.approx(
            oracle_expectation(g.edges, spec, theta), abs=1e-10
        )

    def test_bounded_by_edge_count(self, make_instance, make_spec, make_theta):
        g = make_instance(6, kind="gnp", p=0.5, seed=2)
        spec = make_spec(n=6, layers=2)
        for seed in range(5):
            value = full_expectation(g, spec, make_theta(spec, seed))
            assert -1e-12 <= value <= g.num_edges + 1e-12

    def test_vertex_count_mismatch(self, ring6, make_spec, zero_theta):
        spec = make_spec(n=5, layers=1)
        with pytest.raises(InvalidArgumentError):
            full_expectation(ring6, spec, zero_theta(spec))

    def test_dense_size_limit(self, make_spec, zero_theta):
        g = MaxCutInstance.from_edges(21, [(0, 1)])
        spec = make_spec(n=21, layers=1)
        with pytest.raises(SizeLimitError):
            full_expectation(g, spec, zero_theta(spec))


@pytest.mark.unit
class TestSampleBitstrings:
    """Tests for measurement sampling."""

    def test_basis_state_always_sampled(self, ring6, make_spec):
        spec = make_spec(n=6, layers=1)
        a = Assignment.from_string("010110")
        counts = sample_bitstrings(ring6, spec, ParameterMatrix.basis_encoding(spec, a.bits), 100, seed=0)
        assert counts == {a: 100}

    def test_counts_total_shots(self, ring6, make_spec, make_theta):
        spec = make_spec(n=6, layers=1)
        counts = sample_bitstrings(ring6, spec, make_theta(spec, 1), 500, seed=4)
        assert sum(counts.values()) == 500

    def test_seeded(self, ring6, make_spec, make_theta):
        spec = make_spec(n=6, layers=1)
        theta = make_theta(spec, 1)
        assert sample_bitstrings(ring6, spec, theta, 200, seed=7) == sample_bitstrings(ring6, spec, theta, 200, seed=7)

    def test_shots_must_be_positive(self, ring6, make_spec, zero_theta):
        spec = make_spec(n=6, layers=1)
        with pytest.raises(InvalidArgumentError):
            sample_bitstrings(ring6, spec, zero_theta(spec), 0, seed=0)
