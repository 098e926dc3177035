"""Kind 32: quantum message encrypted with a shared EPR pair (density form).

Joint register layout: qubit 0 = A (Alice's key half), qubit 1 = B (Bob's),
qubit 2 = message.
"""

import numpy as np

from qske.protocols.common import EntangledKeyHandle, TamperedCiphertextError
from qske.qsim import (
    DensityMatrix,
    apply_unitary,
    bell_state,
    partial_trace,
    standard_gate,
    tensor,
    trace_distance,
)

MESSAGE = 2
FACTOR_TOL = 1e-10


def bell_density() -> DensityMatrix:
    return bell_state().density()


def kind32_setup() -> EntangledKeyHandle:
    return EntangledKeyHandle(bell_density(), alice_register=0, bob_register=1)


def kind32_encrypt(rho: DensityMatrix, key: EntangledKeyHandle) -> DensityMatrix:
    if rho.num_qubits != 1:
        raise ValueError(f"kind 32 plaintext is one qubit, got {rho.num_qubits}")
    key.consume()
    joint = tensor(key.density(), rho)
    return apply_unitary(joint, standard_gate("CNOT"), [key.alice_register, MESSAGE])


def kind32_expected_ciphertext(rho: DensityMatrix) -> np.ndarray:
    """Sum over a, b of |aa><bb| (x) X^a rho X^b, halved; built term by term."""
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    out = np.zeros((8, 8), dtype=complex)
    for a in (0, 1):
        for b in (0, 1):
            ket_aa = np.zeros(4)
            ket_aa[3 * a] = 1
            ket_bb = np.zeros(4)
            ket_bb[3 * b] = 1
            left = np.linalg.matrix_power(x, a)
            right = np.linalg.matrix_power(x, b)
            out += np.kron(np.outer(ket_aa, ket_bb), left @ rho.entries @ right) / 2
    return out


def kind32_decrypt(joint: DensityMatrix, key: EntangledKeyHandle) -> DensityMatrix:
    if joint.num_qubits != 3:
        raise ValueError(f"kind 32 joint state is three qubits, got {joint.num_qubits}")
    out = apply_unitary(joint, standard_gate("CNOT"), [key.bob_register, MESSAGE])
    plain = partial_trace(out, [MESSAGE])
    restored = partial_trace(out, [key.alice_register, key.bob_register])
    factored = np.kron(restored.entries, plain.entries)
    if np.max(np.abs(out.entries - factored)) > FACTOR_TOL:
        raise TamperedCiphertextError("decrypted state is still entangled with the key")
    if trace_distance(restored, bell_density()) > FACTOR_TOL:
        raise TamperedCiphertextError("key registers were not restored to the EPR pair")
    key.joint_state = restored
    key.consumed = False
    return plain
