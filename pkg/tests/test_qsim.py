import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from qske.qsim import (
    DensityMatrix,
    RandomSource,
    StateVector,
    UnitaryOperator,
    apply_unitary,
    bell_state,
    equal_up_to_global_phase,
    identity,
    measure_computational,
    measure_in_basis,
    minus,
    outcome_probabilities,
    partial_trace,
    plus,
    project,
    random_density,
    random_state,
    standard_gate,
    tensor,
    trace_distance,
)

S2 = 1 / np.sqrt(2)
seeds = st.integers(min_value=0, max_value=2**32)
GATES = ["X", "Y", "Z", "H", "CNOT"]
FROZEN_BITS = [1, 1, 1, 0, 0, 0, 0, 0]


def lapack_trace_distance(a, b):
    return 0.5 * np.sum(np.abs(np.linalg.eigvalsh(a.entries - b.entries)))


class TestConstruction:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="normalized"):
            StateVector([1, 1])

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError, match="power of two"):
            StateVector([1, 0, 0])

    def test_rejects_more_than_ten_qubits(self):
        with pytest.raises(ValueError, match="cap"):
            StateVector.basis([0] * 11)

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            StateVector([np.nan, 0])

    def test_density_invariants(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(np.eye(2))
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix([[0.5, 0.1], [0.3, 0.5]])
        with pytest.raises(ValueError, match="negative"):
            DensityMatrix([[1.5, 0], [0, -0.5]])

    def test_non_unitary_rejected(self):
        with pytest.raises(ValueError, match="unitary"):
            UnitaryOperator([[1, 1], [0, 1]])

    def test_values_are_immutable(self):
        s = StateVector.basis("01")
        with pytest.raises(ValueError):
            s.amplitudes[0] = 1


class TestTensor:
    def test_basis_concatenation(self):
        s = tensor(StateVector.basis([0]), StateVector.basis([1]))
        np.testing.assert_array_equal(s.amplitudes, [0, 1, 0, 0])

    def test_identity(self):
        np.testing.assert_array_equal(tensor(identity(1), identity(1)).entries, np.eye(4))

    def test_bell_times_message(self):
        for x in (0, 1):
            s = tensor(bell_state(), StateVector.basis([x]))
            expected = np.zeros(8)
            expected[0b000 | x] = S2
            expected[0b110 | x] = S2
            np.testing.assert_allclose(s.amplitudes, expected, atol=1e-15)

    def test_mixed_kinds_rejected(self):
        with pytest.raises(TypeError):
            tensor(StateVector.basis([0]), identity(1))


class TestApplyUnitary:
    def test_pauli_flip(self, backend):
        out = apply_unitary(StateVector.basis([0]), standard_gate("X"), [0])
        np.testing.assert_array_equal(out.amplitudes, [0, 1])

    def test_hadamard_involution(self, backend):
        h = standard_gate("H")
        out = apply_unitary(apply_unitary(StateVector.basis([0]), h, [0]), h, [0])
        np.testing.assert_allclose(out.amplitudes, [1, 0], atol=1e-15)

    def test_cnot_on_bell_and_message(self, backend):
        # (|00>+|11>)/sqrt2 |x>  ->  (|00x> + |11,x^1>)/sqrt2
        for x in (0, 1):
            s = apply_unitary(tensor(bell_state(), StateVector.basis([x])), standard_gate("CNOT"), [0, 2])
            expected = np.zeros(8)
            expected[int(f"00{x}", 2)] = S2
            expected[int(f"11{x ^ 1}", 2)] = S2
            np.testing.assert_allclose(s.amplitudes, expected, atol=1e-12)

    def test_target_order_matters(self, backend):
        s = StateVector.basis("01")
        np.testing.assert_array_equal(apply_unitary(s, standard_gate("CNOT"), [1, 0]).amplitudes, [0, 0, 0, 1])
        np.testing.assert_array_equal(apply_unitary(s, standard_gate("CNOT"), [0, 1]).amplitudes, [0, 1, 0, 0])

    def test_errors(self):
        s = StateVector.basis("00")
        with pytest.raises(ValueError, match="repeated"):
            apply_unitary(s, standard_gate("CNOT"), [1, 1])
        with pytest.raises(ValueError, match="targets"):
            apply_unitary(s, standard_gate("CNOT"), [0])
        with pytest.raises(ValueError, match="range"):
            apply_unitary(s, standard_gate("X"), [2])

    def test_density_conjugation(self, backend):
        rho = StateVector.basis([0]).density()
        out = apply_unitary(rho, standard_gate("H"), [0])
        np.testing.assert_allclose(out.entries, plus().density().entries, atol=1e-15)

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(seed=seeds, gate=st.sampled_from(GATES))
    def test_norm_preserved_and_inverse_restores(self, seed, gate):
        rng = RandomSource(seed)
        u = standard_gate(gate)
        n = 3
        targets = [0, 2] if u.num_qubits == 2 else [1]
        psi = random_state(n, rng)
        out = apply_unitary(psi, u, targets)
        assert abs(np.linalg.norm(out.amplitudes) - 1) <= 1e-9
        rho = random_density(n, rng)
        back = apply_unitary(apply_unitary(rho, u, targets), u.dagger(), targets)
        assert trace_distance(back, rho) <= 1e-9


class TestStandardGates:
    def test_x(self):
        np.testing.assert_array_equal(apply_unitary(StateVector.basis([0]), standard_gate("X"), [0]).amplitudes, [0, 1])

    def test_z_on_plus(self):
        out = apply_unitary(plus(), standard_gate("Z"), [0])
        np.testing.assert_allclose(out.amplitudes, minus().amplitudes)

    def test_y_h_on_one(self):
        # hand product: H|1> = (1, -1)/sqrt2; Y (a, b) = (-i b, i a) -> (i, i)/sqrt2
        hand = np.array([1j * S2, 1j * S2])
        u = standard_gate("Y") @ standard_gate("H")
        out = apply_unitary(StateVector.basis([1]), u, [0])
        np.testing.assert_allclose(out.amplitudes, hand, atol=1e-15)
        assert equal_up_to_global_phase(out, StateVector(-plus().amplitudes), 1e-9)
        assert not np.allclose(out.amplitudes, -plus().amplitudes)

    def test_unknown(self):
        with pytest.raises(ValueError, match="unknown gate"):
            standard_gate("T")

    def test_all_unitary(self):
        for name in GATES:
            u = standard_gate(name).entries
            assert np.max(np.abs(u @ u.conj().T - np.eye(len(u)))) <= 1e-10


class TestBellState:
    def test_amplitudes(self):
        np.testing.assert_allclose(bell_state().amplitudes, [S2, 0, 0, S2])

    def test_reduced_is_maximally_mixed(self):
        for keep in ([0], [1]):
            r = partial_trace(bell_state().density(), keep)
            np.testing.assert_allclose(r.entries, np.eye(2) / 2, atol=1e-15)

    def test_disentangling_circuit(self):
        s = apply_unitary(bell_state(), standard_gate("CNOT"), [0, 1])
        s = apply_unitary(s, standard_gate("H"), [0])
        np.testing.assert_allclose(s.amplitudes, [1, 0, 0, 0], atol=1e-15)


class TestPartialTrace:
    def test_product_state(self, rng):
        a, b = random_density(1, rng), random_density(1, rng)
        assert trace_distance(partial_trace(tensor(a, b), [0]), a) <= 1e-10
        assert trace_distance(partial_trace(tensor(a, b), [1]), b) <= 1e-10

    def test_keep_order(self, rng):
        a, b, c = (random_density(1, rng) for _ in range(3))
        joint = tensor(tensor(a, b), c)
        got = partial_trace(joint, [2, 0])
        np.testing.assert_allclose(got.entries, np.kron(c.entries, a.entries), atol=1e-12)

    def test_independent_key_reduction(self):
        # (|0>_B(|00>+|11>) + |1>_B(|01>+|10>))/2, reduce to the last qubit
        amp = np.zeros(8)
        for idx in (0b000, 0b011, 0b101, 0b110):
            amp[idx] = 0.5
        r = partial_trace(StateVector(amp).density(), [2])
        np.testing.assert_allclose(r.entries, np.eye(2) / 2, atol=1e-15)

    def test_errors(self):
        rho = bell_state().density()
        with pytest.raises(ValueError, match="empty"):
            partial_trace(rho, [])
        with pytest.raises(ValueError, match="invalid"):
            partial_trace(rho, [2])
        with pytest.raises(ValueError, match="invalid"):
            partial_trace(rho, [0, 0])

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_trace_preserved(self, seed):
        rho = random_density(3, RandomSource(seed))
        for keep in ([0], [1, 2], [2, 0, 1]):
            assert abs(np.trace(partial_trace(rho, keep).entries) - 1) <= 1e-9


class TestMeasurement:
    def test_basis_state(self, rng):
        rec = measure_computational(StateVector.basis([1]), [0], rng)
        assert rec.outcome == "1"
        assert rec.probability == pytest.approx(1.0, abs=1e-12)

    def test_bell_collapse(self):
        rec = project(bell_state(), [0], "0")
        assert rec.probability == pytest.approx(0.5, abs=1e-12)
        np.testing.assert_allclose(rec.post_state.amplitudes, [1, 0, 0, 0], atol=1e-15)

    def test_bell_sampling_is_correlated(self):
        for i in range(20):
            rec = measure_computational(bell_state(), [0, 1], RandomSource(i))
            assert rec.outcome in ("00", "11")

    def test_outcome_probabilities_target_order(self):
        s = StateVector.basis("100")
        assert outcome_probabilities(s, [0, 2])["10"] == 1
        assert outcome_probabilities(s, [2, 0])["01"] == 1

    def test_plus_in_hadamard_basis(self, rng):
        rec = measure_in_basis(plus(), 0, 1, rng)
        assert rec.outcome == "0" and rec.probability == pytest.approx(1.0)
        np.testing.assert_allclose(rec.post_state.amplitudes, plus().amplitudes, atol=1e-15)

    def test_plus_in_computational_basis(self):
        counts = {"0": 0, "1": 0}
        for i in range(400):
            rec = measure_in_basis(plus(), 0, 0, RandomSource(i))
            assert rec.probability == pytest.approx(0.5)
            counts[rec.outcome] += 1
        assert 150 < counts["0"] < 250

    def test_bad_basis(self, rng):
        with pytest.raises(ValueError, match="basis_id"):
            measure_in_basis(plus(), 0, 2, rng)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_basis_zero_matches_computational(self, seed):
        psi = random_state(2, RandomSource(seed))
        a = measure_in_basis(psi, 1, 0, RandomSource(seed, (1,)))
        b = measure_computational(psi, [1], RandomSource(seed, (1,)))
        assert a.outcome == b.outcome and a.probability == b.probability
        np.testing.assert_array_equal(a.post_state.amplitudes, b.post_state.amplitudes)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds, targets=st.sampled_from([[0], [2], [1, 0], [0, 1, 2]]))
    def test_probabilities_sum_to_one(self, seed, targets):
        psi = random_state(3, RandomSource(seed))
        probs = outcome_probabilities(psi, targets)
        assert abs(sum(probs.values()) - 1) <= 1e-9
        for outcome, p in probs.items():
            if p > 1e-12:
                assert project(psi, targets, outcome).probability == pytest.approx(p, abs=1e-12)


class TestTraceDistance:
    def test_self(self, rng):
        rho = random_density(2, rng)
        assert trace_distance(rho, rho) == 0

    def test_orthogonal(self):
        assert trace_distance(StateVector.basis([0]).density(), StateVector.basis([1]).density()) == pytest.approx(1)

    def test_zero_vs_mixed(self):
        assert trace_distance(StateVector.basis([0]).density(), DensityMatrix.maximally_mixed()) == pytest.approx(0.5, abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            trace_distance(DensityMatrix.maximally_mixed(1), DensityMatrix.maximally_mixed(2))

    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(seed=seeds)
    def test_matches_lapack_and_is_metric(self, seed, backend):
        rng = RandomSource(seed)
        a, b, c = (random_density(2, rng) for _ in range(3))
        assert trace_distance(a, b) == pytest.approx(lapack_trace_distance(a, b), abs=1e-10)
        assert trace_distance(a, b) == pytest.approx(trace_distance(b, a), abs=1e-12)
        assert trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-9


class TestGlobalPhase:
    def test_sign(self):
        assert equal_up_to_global_phase(StateVector.basis([0]), StateVector([-1, 0]))

    def test_orthogonal(self):
        assert not equal_up_to_global_phase(StateVector.basis([0]), StateVector.basis([1]))

    def test_relative_phase_differs(self):
        assert not equal_up_to_global_phase(plus(), minus())


class TestRandomSource:
    def test_reproducible(self):
        a, b = RandomSource(5), RandomSource(5)
        assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]

    def test_derived_streams_differ(self):
        r = RandomSource(5)
        assert r.derive(0).random() != r.derive(1).random()

    def test_frozen_stream_values(self):
        # PCG64 output is platform independent; pin the first draws
        r = RandomSource(0)
        assert r.algorithm_id == "pcg64"
        assert [r.bit() for _ in range(8)] == FROZEN_BITS

    def test_bad_seed(self):
        with pytest.raises(ValueError):
            RandomSource(-1)
