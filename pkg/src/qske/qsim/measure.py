"""Projective measurements in the computational and Hadamard bases."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qske.qsim.gates import standard_gate
from qske.qsim.rng import RandomSource
from qske.qsim.states import STATE_TOL, StateVector, apply_unitary


@dataclass(frozen=True)
class MeasurementRecord:
    outcome: str
    probability: float
    post_state: StateVector


def _targets(state: StateVector, targets) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if not targets:
        raise ValueError("no measurement targets")
    if len(set(targets)) != len(targets) or any(t < 0 or t >= state.num_qubits for t in targets):
        raise ValueError(f"invalid targets {targets} for {state.num_qubits} qubits")
    return targets


def outcome_probabilities(state: StateVector, targets) -> dict[str, float]:
    """Born probabilities of every outcome on ``targets`` (bit strings in target order)."""
    targets = _targets(state, targets)
    n = state.num_qubits
    p = (np.abs(state.amplitudes) ** 2).reshape((2,) * n)
    rest = tuple(q for q in range(n) if q not in targets)
    if rest:
        p = p.sum(axis=rest)
    # remaining axes are in ascending qubit order; reorder to target order
    ordered = sorted(targets)
    flat = np.transpose(p, [ordered.index(t) for t in targets]).reshape(-1)
    k = len(targets)
    return {format(i, f"0{k}b"): float(flat[i]) for i in range(1 << k)}


def project(state: StateVector, targets, outcome: str) -> MeasurementRecord:
    """The post-measurement branch for a given ``outcome`` (no sampling)."""
    targets = _targets(state, targets)
    if len(outcome) != len(targets) or set(outcome) - {"0", "1"}:
        raise ValueError(f"outcome {outcome!r} does not match targets {targets}")
    n = state.num_qubits
    idx = np.arange(state.dim)
    keep = np.ones(state.dim, dtype=bool)
    for t, b in zip(targets, outcome):
        keep &= ((idx >> (n - 1 - t)) & 1) == int(b)
    amp = np.where(keep, state.amplitudes, 0)
    prob = float(np.sum(np.abs(amp) ** 2))
    assert prob > STATE_TOL, f"zero-probability branch {outcome!r} selected"
    return MeasurementRecord(outcome, prob, StateVector(amp / np.sqrt(prob)))


def measure_computational(state: StateVector, targets, rng: RandomSource) -> MeasurementRecord:
    probs = outcome_probabilities(state, targets)
    u = rng.random()
    acc = 0.0
    chosen = None
    for outcome, p in probs.items():
        if p <= 0.0:
            continue
        chosen = outcome
        acc += p
        if u < acc:
            break
    return project(state, targets, chosen)


def measure_in_basis(state: StateVector, target: int, basis_id: int, rng: RandomSource) -> MeasurementRecord:
    """Measure one qubit in {|0>,|1>} (``basis_id=0``) or {|+>,|->} (``basis_id=1``).

    For the Hadamard basis, outcome "0" means |+> and the post-state is rotated
    back so the measured qubit is left in |+> or |->.
    """
    if basis_id == 0:
        return measure_computational(state, [target], rng)
    if basis_id != 1:
        raise ValueError(f"basis_id must be 0 or 1, got {basis_id!r}")
    h = standard_gate("H")
    rec = measure_computational(apply_unitary(state, h, [target]), [target], rng)
    return MeasurementRecord(rec.outcome, rec.probability, apply_unitary(rec.post_state, h, [target]))
