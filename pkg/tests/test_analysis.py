import numpy as np
import pytest

from qske.analysis import (
    KEY_CIRCUIT,
    UnsupportedKindError,
    average_ciphertext,
    correctness_trial,
    entangled_key_contrast,
    independent_key_demo,
)
from qske.qsim import DensityMatrix, RandomSource, StateVector, minus, plus, random_density, trace_distance

MIXED = DensityMatrix.maximally_mixed(1)
S2 = 1 / np.sqrt(2)


class TestAverageCiphertext:
    def test_kind28_zero(self):
        rep = average_ciphertext(28, StateVector.basis([0]).density())
        assert rep.distance_to_maximally_mixed <= 1e-12
        assert rep.key_count_or_samples == 4

    def test_kind28_mixed(self):
        np.testing.assert_allclose(average_ciphertext(28, MIXED).averaged_ciphertext.entries, np.eye(2) / 2)

    def test_kind28_brute_force_twirl(self):
        # oracle: (rho + X rho X + Z rho Z + ZX rho XZ) / 4 by direct matrix products
        x = np.array([[0, 1], [1, 0]])
        z = np.diag([1, -1])
        rng = RandomSource(50)
        for _ in range(50):
            rho = random_density(1, rng)
            r = rho.entries
            twirl = (r + x @ r @ x + z @ r @ z + (z @ x) @ r @ (z @ x).conj().T) / 4
            np.testing.assert_allclose(twirl, np.eye(2) / 2, atol=1e-12)
            rep = average_ciphertext(28, rho)
            assert np.max(np.abs(rep.averaged_ciphertext.entries - twirl)) <= 1e-12
            assert rep.distance_to_maximally_mixed <= 1e-12

    @pytest.mark.parametrize("x", [0, 1])
    def test_kind12(self, x):
        # keys produce |x>, |x^1>, H|x>, H|x^1> up to phase; their projectors average to I/2
        projectors = [StateVector.basis([0]), StateVector.basis([1]), plus(), minus()]
        oracle = sum(p.density().entries for p in projectors) / 4
        rep = average_ciphertext(12, x)
        np.testing.assert_allclose(rep.averaged_ciphertext.entries, oracle, atol=1e-12)
        assert rep.distance_to_maximally_mixed <= 1e-12

    def test_unsupported(self):
        with pytest.raises(UnsupportedKindError):
            average_ciphertext(1, 0)


def independent_key_decrypted():
    # (|0>_B(|0>_A|0> + |1>_A|1>) + |1>_B(|0>_A|1> + |1>_A|0>))/2, order (B, A, message)
    v = np.zeros(8)
    for b, a, m in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        v[4 * b + 2 * a + m] = 0.5
    return v


class TestIndependentKeyDemo:
    def test_alice_side_snapshot(self):
        rep = independent_key_demo(0)
        got = rep.stage("alice_key_and_ciphertext").amplitudes
        np.testing.assert_allclose(got, [S2, 0, 0, S2], atol=1e-12)

    def test_after_decryption_snapshot(self):
        rep = independent_key_demo(0)
        assert np.max(np.abs(rep.stage("after_decryption").amplitudes - independent_key_decrypted())) <= 1e-12

    def test_final_is_maximally_mixed(self):
        rep = independent_key_demo(0)
        assert trace_distance(rep.final_reduced, MIXED) <= 1e-12
        assert rep.distance_to_maximally_mixed <= 1e-12
        assert rep.distance_to_plaintext == pytest.approx(0.5, abs=1e-12)
        assert rep.verdict == "decryption failed"

    def test_plaintext_independent(self):
        a, b = independent_key_demo(0), independent_key_demo(1)
        assert np.max(np.abs(a.final_reduced.entries - b.final_reduced.entries)) <= 1e-12

    def test_snapshots_are_valid(self):
        for _, state in independent_key_demo(1).stage_states:
            assert abs(np.linalg.norm(state.amplitudes) - 1) <= 1e-12


class TestEntangledContrast:
    @pytest.mark.parametrize("m", [0, 1])
    def test_recovers_message(self, m):
        rep = entangled_key_contrast(m)
        target = StateVector.basis([m]).density()
        assert np.max(np.abs(rep.final_reduced.entries - target.entries)) <= 1e-12
        assert rep.verdict == "decryption succeeded"

    def test_distance_between_demos(self):
        d = trace_distance(entangled_key_contrast(0).final_reduced, independent_key_demo(0).final_reduced)
        assert d == pytest.approx(0.5, abs=1e-12)

    def test_same_gate_sequence(self):
        a, b = independent_key_demo(0), entangled_key_contrast(0)
        assert a.gate_sequence == b.gate_sequence == tuple((g, t) for _, g, t in KEY_CIRCUIT)


class TestCorrectnessTrial:
    @pytest.mark.parametrize("kind", [1, 2, 3, 12, 16, 28, 32, 4, 8, 20, 24])
    def test_exact_success(self, kind):
        rep = correctness_trial(kind, 200, seed=9)
        assert rep.successes == rep.trials == 200
        assert rep.seed == 9 and rep.algorithm_id == "pcg64"

    def test_kind16_thousand(self):
        assert correctness_trial(16, 1000, seed=1).success_fraction == 1.0

    @pytest.mark.parametrize("mode", ["sampled", "simulated"])
    def test_kind3_thousand(self, mode):
        assert correctness_trial(3, 1000, seed=1, t=3, mode=mode).success_fraction == 1.0

    def test_kind12_mismatched_keys(self):
        rep = correctness_trial(12, 2000, seed=4, mismatched_keys=True)
        assert abs(rep.success_fraction - 0.5) <= 0.05

    def test_quantum_kinds_report_distance(self):
        rep = correctness_trial(32, 50, seed=2)
        assert rep.max_trace_distance is not None and rep.max_trace_distance <= 1e-10
        assert correctness_trial(16, 5).max_trace_distance is None

    def test_deterministic(self):
        assert correctness_trial(2, 30, seed=5) == correctness_trial(2, 30, seed=5)

    def test_unsupported(self):
        with pytest.raises(UnsupportedKindError, match="NotExists"):
            correctness_trial(5, 1)
        with pytest.raises(ValueError):
            correctness_trial(1, 0)
