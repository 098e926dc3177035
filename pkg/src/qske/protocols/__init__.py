"""Executable protocols for every constructible kind."""

from qske.protocols.common import (
    BitDecryption,
    BitString,
    EntangledKeyHandle,
    KeyConsumedError,
    NotBasisStateError,
    PqcKey,
    TamperedCiphertextError,
    format_bits,
    parity,
    parse_bits,
    xor_bits,
)
from qske.protocols.kind1 import kind1_decrypt, kind1_encrypt
from qske.protocols.kind2 import (
    ElGamalKey,
    Kind2Ciphertext,
    dlog_oracle,
    is_generator,
    kind2_decrypt,
    kind2_encrypt,
)
from qske.protocols.kind3 import (
    SAMPLED,
    SIMULATED,
    Kind3Params,
    kind3_ciphertext_distribution,
    kind3_decrypt,
    kind3_encrypt,
)
from qske.protocols.kind12 import (
    kind12_branches,
    kind12_decrypt,
    kind12_encrypt,
    kind12_expected_ciphertext,
)
from qske.protocols.kind16 import kind16_decrypt, kind16_encrypt, kind16_setup, kind16_unmask
from qske.protocols.kind28 import kind28_decrypt, kind28_encrypt, pauli_key_operator
from qske.protocols.kind32 import (
    bell_density,
    kind32_decrypt,
    kind32_encrypt,
    kind32_expected_ciphertext,
    kind32_setup,
)
from qske.protocols.lift import LIFT_KINDS, basis_bits, lift_classical

IMPLEMENTED_KINDS = (1, 2, 3, 12, 16, 28, 32) + LIFT_KINDS
