"""Kind 3: classical everything except a quantum encryption algorithm.

The plaintext bit ``x`` is split into ``t`` parity shares ``lambda`` (XOR of
the shares equals ``x``); the share string is encrypted as ``lambda xor k``.
In simulated mode the random choice of ``lambda`` comes from measuring the
output register of a circuit acting on the uniform superposition of all
parity-``x`` strings; sampled mode draws ``lambda`` classically. Both give
the same ciphertext distribution.

Simulated register layout: qubits ``0..t-1`` hold the shares, ``t..2t-1``
the ciphertext. The key is classical and enters as classically controlled
X gates, so the register needs ``2t`` qubits and ``t`` is capped at 5.
"""

from __future__ import annotations

from dataclasses import dataclass

from qske.protocols.common import BitString, check_bit, parity, parse_bits, xor_bits
from qske.qsim import (
    MAX_QUBITS,
    RandomSource,
    StateVector,
    apply_unitary,
    measure_computational,
    outcome_probabilities,
    standard_gate,
)

SAMPLED = "sampled"
SIMULATED = "simulated"
MAX_SIMULATED_SHARES = MAX_QUBITS // 2


@dataclass(frozen=True)
class Kind3Params:
    t: int
    k: BitString
    mode: str = SAMPLED

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"share count must be >= 1, got {self.t}")
        object.__setattr__(self, "k", parse_bits(self.k))
        if len(self.k) != self.t:
            raise ValueError(f"key length {len(self.k)} != share count {self.t}")
        if self.mode not in (SAMPLED, SIMULATED):
            raise ValueError(f"mode must be {SAMPLED!r} or {SIMULATED!r}, got {self.mode!r}")
        if self.mode == SIMULATED and self.t > MAX_SIMULATED_SHARES:
            raise ValueError(
                f"simulated mode needs 2t qubits; t={self.t} exceeds {MAX_SIMULATED_SHARES}"
            )


def share_superposition(x: int, t: int) -> StateVector:
    """Uniform superposition of all ``t``-bit strings with parity ``x``, on a ``2t``-qubit register."""
    state = StateVector.basis([0] * (2 * t))
    h, cnot, xg = standard_gate("H"), standard_gate("CNOT"), standard_gate("X")
    for i in range(t - 1):
        state = apply_unitary(state, h, [i])
    for i in range(t - 1):
        state = apply_unitary(state, cnot, [i, t - 1])
    if x:
        state = apply_unitary(state, xg, [t - 1])
    return state


def encryption_circuit(state: StateVector, params: Kind3Params) -> StateVector:
    """``|lambda>|0> -> |lambda>|lambda xor k>``."""
    t = params.t
    cnot, xg = standard_gate("CNOT"), standard_gate("X")
    for i in range(t):
        state = apply_unitary(state, cnot, [i, t + i])
        if params.k[i]:
            state = apply_unitary(state, xg, [t + i])
    return state


def kind3_prepared_state(x: int, params: Kind3Params) -> StateVector:
    return encryption_circuit(share_superposition(check_bit(x), params.t), params)


def kind3_ciphertext_distribution(x: int, params: Kind3Params) -> dict[BitString, float]:
    """Exact Born distribution of the measured ciphertext (simulated circuit)."""
    t = params.t
    probs = outcome_probabilities(kind3_prepared_state(x, params), range(t, 2 * t))
    return {parse_bits(o): p for o, p in probs.items() if p > 1e-12}


def kind3_encrypt(x: int, params: Kind3Params, rng: RandomSource) -> BitString:
    x = check_bit(x)
    t = params.t
    if params.mode == SIMULATED:
        rec = measure_computational(kind3_prepared_state(x, params), range(t, 2 * t), rng)
        return parse_bits(rec.outcome)
    shares = rng.bits(t - 1)
    shares = shares + (parity(shares) ^ x,)
    return xor_bits(shares, params.k)


def kind3_decrypt(c: BitString, params: Kind3Params) -> int:
    return parity(xor_bits(parse_bits(c), params.k))
