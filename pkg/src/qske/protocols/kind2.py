"""Kind 2: ElGamal-style encryption, decrypted through a discrete-log oracle.

The decryptor's quantum discrete-log solver is replaced by brute-force
enumeration, which is exact for the small primes used here.
"""

from __future__ import annotations

from dataclasses import dataclass

from qske.qsim import RandomSource

MAX_MODULUS = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def is_generator(g: int, q: int) -> bool:
    """True iff ``g`` has order ``q - 1`` modulo prime ``q``."""
    if not 1 <= g < q:
        return False
    seen = set()
    x = 1
    for _ in range(q - 1):
        x = x * g % q
        seen.add(x)
    return len(seen) == q - 1


def smallest_generator(q: int) -> int:
    for g in range(2, q):
        if is_generator(g, q):
            return g
    if q == 2:
        return 1
    raise ValueError(f"no generator found modulo {q}")


@dataclass(frozen=True)
class ElGamalKey:
    """Public ``(q, g)``, shared element ``h = g^s mod q``; ``s`` kept for tests."""

    q: int
    g: int
    h: int
    s: int

    def __post_init__(self):
        if not is_prime(self.q) or self.q > MAX_MODULUS:
            raise ValueError(f"modulus must be a prime <= {MAX_MODULUS}, got {self.q}")
        if not is_generator(self.g, self.q):
            raise ValueError(f"{self.g} does not generate the multiplicative group mod {self.q}")
        if pow(self.g, self.s, self.q) != self.h:
            raise ValueError("h != g^s mod q")

    @classmethod
    def from_secret(cls, q: int, g: int, s: int) -> ElGamalKey:
        return cls(q, g, pow(g, s, q), s)

    @classmethod
    def random(cls, q: int, g: int, rng: RandomSource) -> ElGamalKey:
        return cls.from_secret(q, g, rng.integers(1, q - 1))


@dataclass(frozen=True)
class Kind2Ciphertext:
    c1: int
    c2: int


def dlog_oracle(a: int, b: int, q: int) -> int:
    """The unique ``s`` in ``[0, q-2]`` with ``a^s = b (mod q)``."""
    if not 1 <= b < q:
        raise ValueError(f"{b} is not in the multiplicative group mod {q}")
    x = 1
    for s in range(q - 1):
        if x == b:
            return s
        x = x * a % q
    raise ValueError(f"{b} is not a power of {a} modulo {q}")


def kind2_encrypt(m: int, key: ElGamalKey, rng: RandomSource, y: int | None = None) -> Kind2Ciphertext:
    """Encrypt ``m`` with a fresh exponent ``y`` drawn from ``[1, q-1]``."""
    if not 1 <= m < key.q:
        raise ValueError(f"message must be in [1, {key.q - 1}], got {m}")
    if y is None:
        y = rng.integers(1, key.q)
    return Kind2Ciphertext(pow(key.g, y, key.q), pow(key.h, y, key.q) * m % key.q)


def kind2_decrypt(c: Kind2Ciphertext, key: ElGamalKey) -> int:
    y = dlog_oracle(key.g, c.c1, key.q)
    mask = pow(key.h, y, key.q)
    return c.c2 * pow(mask, -1, key.q) % key.q
