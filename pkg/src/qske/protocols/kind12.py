"""Kind 12: classical bit and key, quantum ciphertext and algorithms.

The bit ``x`` is prepared as ``|x>`` and encrypted as ``Y^k2 H^k1 |x>``.
With the standard Pauli Y this equals ``(-1)^(x k2) |x xor k2>`` in basis
``k1`` only up to a global phase; decryption measures in basis ``k1`` and
undoes the ``k2`` flip, which is phase independent.
"""

import numpy as np

from qske.protocols.common import BitDecryption, PqcKey, check_bit
from qske.qsim import (
    RandomSource,
    StateVector,
    apply_unitary,
    measure_in_basis,
    standard_gate,
)


def kind12_operator(key: PqcKey):
    return standard_gate("Y") ** key.k2 @ standard_gate("H") ** key.k1


def kind12_encrypt(x: int, key: PqcKey) -> StateVector:
    x = check_bit(x)
    return apply_unitary(StateVector.basis([x]), kind12_operator(key), [0])


def kind12_expected_ciphertext(x: int, key: PqcKey) -> StateVector:
    """``(-1)^(x k2) |x xor k2>`` written in basis ``k1`` (0: Z basis, 1: X basis)."""
    b = x ^ key.k2
    ket = StateVector.basis([b])
    if key.k1:
        ket = apply_unitary(ket, standard_gate("H"), [0])
    return StateVector((-1) ** (x * key.k2) * ket.amplitudes)


def kind12_decrypt(c: StateVector, key: PqcKey, rng: RandomSource) -> BitDecryption:
    if c.num_qubits != 1:
        raise ValueError(f"kind 12 ciphertext is one qubit, got {c.num_qubits}")
    rec = measure_in_basis(c, 0, key.k1, rng)
    return BitDecryption(int(rec.outcome) ^ key.k2, rec.probability, rec)


def kind12_branches(c: StateVector, key: PqcKey) -> dict[int, float]:
    """Probability of each decrypted bit, by enumerating both measurement branches."""
    probs = np.abs(apply_unitary(c, standard_gate("H"), [0]).amplitudes if key.k1 else c.amplitudes) ** 2
    return {b ^ key.k2: float(probs[b]) for b in (0, 1)}
