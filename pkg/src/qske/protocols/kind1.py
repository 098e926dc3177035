"""Kind 1 (all classical): XOR one-time pad."""

from qske.protocols.common import BitString, xor_bits


def kind1_encrypt(m: BitString, k: BitString) -> BitString:
    return xor_bits(m, k)


def kind1_decrypt(c: BitString, k: BitString) -> BitString:
    return xor_bits(c, k)
