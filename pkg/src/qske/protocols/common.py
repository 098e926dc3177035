"""Bits, keys and result records shared by the protocol implementations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qske.qsim import (
    DensityMatrix,
    MeasurementRecord,
    RandomSource,
    StateVector,
    partial_trace,
    trace_distance,
)

BitString = tuple[int, ...]

KEY_TOL = 1e-9


class KeyConsumedError(RuntimeError):
    """An entangled key handle was used for a second encryption."""


class TamperedCiphertextError(ValueError):
    """The decrypted joint state does not factor into key and plaintext."""


class NotBasisStateError(ValueError):
    """A quantum-tagged input was not a computational basis state."""


def check_bit(x) -> int:
    if x not in (0, 1):
        raise ValueError(f"not a bit: {x!r}")
    return int(x)


def parse_bits(text) -> BitString:
    """``"0110"`` or an iterable of 0/1 -> tuple of ints."""
    if isinstance(text, str):
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return tuple(int(ch) for ch in text)
    bits = tuple(check_bit(b) for b in text)
    if not bits:
        raise ValueError("empty bit string")
    return bits


def format_bits(bits) -> str:
    return "".join(str(b) for b in bits)


def xor_bits(a, b) -> BitString:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x ^ y for x, y in zip(a, b))


def parity(bits) -> int:
    p = 0
    for b in bits:
        p ^= b
    return p


@dataclass(frozen=True)
class PqcKey:
    """Two-bit classical key ``(k1, k2)``."""

    k1: int
    k2: int

    def __post_init__(self):
        check_bit(self.k1)
        check_bit(self.k2)

    @classmethod
    def random(cls, rng: RandomSource) -> PqcKey:
        return cls(rng.bit(), rng.bit())

    @classmethod
    def all(cls) -> list[PqcKey]:
        return [cls(a, b) for a in (0, 1) for b in (0, 1)]

    @classmethod
    def parse(cls, text: str) -> PqcKey:
        bits = parse_bits(text)
        if len(bits) != 2:
            raise ValueError(f"key must be two bits, got {text!r}")
        return cls(*bits)

    def __str__(self):
        return f"{self.k1}{self.k2}"


@dataclass
class EntangledKeyHandle:
    """Shared entangled key: Alice holds ``alice_register``, Bob ``bob_register``.

    Single use: encryption marks the handle consumed; a successful decryption
    writes the restored key state back and clears the flag.
    """

    joint_state: StateVector | DensityMatrix
    alice_register: int = 0
    bob_register: int = 1
    consumed: bool = False

    def density(self) -> DensityMatrix:
        s = self.joint_state
        return s.density() if isinstance(s, StateVector) else s

    def reduced(self, register: int) -> DensityMatrix:
        return partial_trace(self.density(), [register])

    def is_maximally_entangled(self, tol: float = KEY_TOL) -> bool:
        mixed = DensityMatrix.maximally_mixed(1)
        return all(
            trace_distance(self.reduced(r), mixed) <= tol
            for r in (self.alice_register, self.bob_register)
        )

    def consume(self):
        if self.consumed:
            raise KeyConsumedError("entangled key already used; decrypt before reusing it")
        self.consumed = True


@dataclass(frozen=True)
class BitDecryption:
    """Decrypted bit with the Born probability of the branch that produced it."""

    bit: int
    probability: float
    record: MeasurementRecord


def projector_state(bits) -> np.ndarray:
    return StateVector.basis(bits).density().entries
