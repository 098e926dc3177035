"""Kind 16: classical bit encrypted with a shared EPR pair.

Register layout of the joint state: qubit 0 = Alice's half (A), qubit 1 =
Bob's half (B), qubit 2 = message.
"""

import numpy as np

from qske.protocols.common import BitDecryption, EntangledKeyHandle, check_bit
from qske.qsim import (
    RandomSource,
    StateVector,
    apply_unitary,
    bell_state,
    measure_computational,
    standard_gate,
    tensor,
)

MESSAGE = 2


def kind16_setup() -> EntangledKeyHandle:
    return EntangledKeyHandle(bell_state(), alice_register=0, bob_register=1)


def kind16_encrypt(x: int, key: EntangledKeyHandle) -> StateVector:
    x = check_bit(x)
    key.consume()
    joint = tensor(key.joint_state, StateVector.basis([x]))
    return apply_unitary(joint, standard_gate("CNOT"), [key.alice_register, MESSAGE])


def kind16_unmask(joint: StateVector, key: EntangledKeyHandle) -> StateVector:
    """Bob's CNOT from his key half onto the message qubit (before measuring)."""
    if joint.num_qubits != 3:
        raise ValueError(f"kind 16 joint state is three qubits, got {joint.num_qubits}")
    return apply_unitary(joint, standard_gate("CNOT"), [key.bob_register, MESSAGE])


def kind16_decrypt(joint: StateVector, key: EntangledKeyHandle, rng: RandomSource) -> BitDecryption:
    rec = measure_computational(kind16_unmask(joint, key), [MESSAGE], rng)
    # the message qubit is now a basis state; keep the A,B factor as the key
    amp = rec.post_state.amplitudes.reshape(4, 2)[:, int(rec.outcome)]
    key.joint_state = StateVector(amp / np.linalg.norm(amp))
    key.consumed = False
    return BitDecryption(int(rec.outcome), rec.probability, rec)
