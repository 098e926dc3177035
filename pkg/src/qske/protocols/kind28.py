"""Kind 28: private quantum channel (Pauli one-time pad on one qubit)."""

from qske.protocols.common import PqcKey
from qske.qsim import DensityMatrix, UnitaryOperator, apply_unitary, identity, standard_gate


def pauli_key_operator(key: PqcKey) -> UnitaryOperator:
    """``Z^k1 X^k2``."""
    u = identity(1)
    if key.k1:
        u = u @ standard_gate("Z")
    if key.k2:
        u = u @ standard_gate("X")
    return u


def _check_one_qubit(rho: DensityMatrix):
    if rho.num_qubits != 1:
        raise ValueError(
            f"kind 28 encrypts one qubit at a time, got {rho.num_qubits}; loop over qubits"
        )


def kind28_encrypt(rho: DensityMatrix, key: PqcKey) -> DensityMatrix:
    _check_one_qubit(rho)
    return apply_unitary(rho, pauli_key_operator(key), [0])


def kind28_decrypt(rho_c: DensityMatrix, key: PqcKey) -> DensityMatrix:
    _check_one_qubit(rho_c)
    return apply_unitary(rho_c, pauli_key_operator(key).dagger(), [0])
