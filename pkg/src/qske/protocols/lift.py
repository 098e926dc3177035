"""Kinds 4, 8, 20, 24: a classical XOR cipher lifted to quantum circuits.

Encryption and decryption run as reversible circuits (CNOT from key qubit to
message qubit). Classical-tagged values are encoded as computational basis
states and classical-tagged outputs are read by measurement. Quantum-tagged
plaintexts and keys must be basis states. The XOR circuit is a product of
independent 2-qubit circuits, so it is simulated one bit position at a time.
"""

from __future__ import annotations

import numpy as np

from qske.protocols.common import BitString, NotBasisStateError, format_bits, parse_bits
from qske.qsim import (
    RandomSource,
    StateVector,
    apply_unitary,
    measure_computational,
    standard_gate,
    tensor,
)
from qske.report import TrialReport
from qske.taxonomy import Q, Quintuple

LIFT_KINDS = (4, 8, 20, 24)
MAX_LENGTH = 8


def basis_bits(state: StateVector) -> BitString:
    """The bit string of a computational basis state; rejects superpositions."""
    probs = np.abs(state.amplitudes) ** 2
    idx = int(np.argmax(probs))
    if abs(probs[idx] - 1.0) > 1e-9:
        raise NotBasisStateError("quantum-tagged input must be a computational basis state")
    return parse_bits(format(idx, f"0{state.num_qubits}b"))


def _classical_or_basis(value, quantum: bool, what: str) -> BitString:
    if isinstance(value, StateVector):
        if not quantum:
            raise TypeError(f"{what} is classical for this kind; pass bits, not a state")
        return basis_bits(value)
    return parse_bits(value)


def _xor_circuit(msg_bit: int, key_bit: int, measure: bool, rng: RandomSource):
    """Run CNOT(key -> message) on ``|key>|message>``; measure or return the message qubit."""
    state = tensor(StateVector.basis([key_bit]), StateVector.basis([msg_bit]))
    state = apply_unitary(state, standard_gate("CNOT"), [0, 1])
    if measure:
        return int(measure_computational(state, [1], rng).outcome)
    amp = state.amplitudes.reshape(2, 2)[key_bit]
    return StateVector(amp)


def lift_classical(kind: int, m, k, rng: RandomSource | None = None) -> TrialReport:
    """Encrypt then decrypt ``m`` under ``k`` with the lifted XOR cipher of ``kind``."""
    if kind not in LIFT_KINDS:
        raise ValueError(f"lift is defined for kinds {LIFT_KINDS}, got {kind}")
    rng = rng or RandomSource(0)
    q = Quintuple.from_index(kind)
    p_quantum, k_quantum = q.plaintext is Q, q.key is Q
    m_bits = _classical_or_basis(m, p_quantum, "plaintext")
    k_bits = _classical_or_basis(k, k_quantum, "key")
    if len(m_bits) != len(k_bits):
        raise ValueError(f"length mismatch: {len(m_bits)} vs {len(k_bits)}")
    if len(m_bits) > MAX_LENGTH:
        raise ValueError(f"length {len(m_bits)} exceeds {MAX_LENGTH}")

    # ciphertext is classical for all lift kinds
    cipher = tuple(_xor_circuit(mb, kb, True, rng) for mb, kb in zip(m_bits, k_bits))
    if p_quantum:
        qubits = [_xor_circuit(cb, kb, False, rng) for cb, kb in zip(cipher, k_bits)]
        out = qubits[0]
        for qb in qubits[1:]:
            out = tensor(out, qb)
        ok = bool(np.allclose(out.amplitudes, StateVector.basis(m_bits).amplitudes, atol=1e-12))
    else:
        out_bits = tuple(_xor_circuit(cb, kb, True, rng) for cb, kb in zip(cipher, k_bits))
        ok = out_bits == m_bits

    return TrialReport(
        kind=kind,
        parameters={
            "quintuple": str(q),
            "plaintext": format_bits(m_bits),
            "key": format_bits(k_bits),
            "ciphertext": format_bits(cipher),
        },
        seed=rng.seed,
        algorithm_id=rng.algorithm_id,
        trials=1,
        successes=int(ok),
        notes=f"classical XOR cipher lifted to quantum circuits for kind {kind}",
    )
