"""The 32 kinds of quantum symmetric-key encryption and their existence status.

A kind is a choice of classical (C) or quantum (Q) for each of plaintext,
ciphertext, key, encryption and decryption. Kinds are numbered by reading
``(P, C, K, E, D)`` as a binary number with P most significant and Q = 1,
plus one.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass


class SpaceTag(enum.IntEnum):
    CLASSICAL = 0
    QUANTUM = 1

    @property
    def letter(self) -> str:
        return "CQ"[self.value]

    @classmethod
    def parse(cls, letter: str) -> SpaceTag:
        try:
            return cls("CQ".index(letter.upper()))
        except ValueError:
            raise ValueError(f"space tag must be 'C' or 'Q', got {letter!r}") from None


C = SpaceTag.CLASSICAL
Q = SpaceTag.QUANTUM


class ExistenceClass(enum.Enum):
    EXISTS = "E"
    NOT_EXISTS = "N"
    OPEN = "O"

    @property
    def label(self) -> str:
        return {"E": "Exists", "N": "NotExists", "O": "Open"}[self.value]


@dataclass(frozen=True)
class Quintuple:
    plaintext: SpaceTag
    ciphertext: SpaceTag
    key: SpaceTag
    encryption: SpaceTag
    decryption: SpaceTag

    @classmethod
    def parse(cls, text: str) -> Quintuple:
        """``"CQCQQ"`` -> Quintuple(C, Q, C, Q, Q)."""
        letters = [ch for ch in text if ch.strip() and ch not in "(),"]
        if len(letters) != 5:
            raise ValueError(f"need five C/Q letters, got {text!r}")
        return cls(*(SpaceTag.parse(ch) for ch in letters))

    @classmethod
    def from_index(cls, index: int) -> Quintuple:
        if not 1 <= index <= 32:
            raise ValueError(f"kind index must be in 1..32, got {index}")
        bits = format(index - 1, "05b")
        return cls(*(SpaceTag(int(b)) for b in bits))

    def tags(self) -> tuple[SpaceTag, ...]:
        return (self.plaintext, self.ciphertext, self.key, self.encryption, self.decryption)

    def __str__(self):
        return "".join(t.letter for t in self.tags())


@dataclass(frozen=True)
class KindRecord:
    index: int
    quintuple: Quintuple
    existence: ExistenceClass
    rationale: str

    def to_dict(self) -> dict:
        q = self.quintuple
        return {
            "index": self.index,
            "p": q.plaintext.letter,
            "c": q.ciphertext.letter,
            "k": q.key.letter,
            "e": q.encryption.letter,
            "d": q.decryption.letter,
            "existence": self.existence.value,
            "rationale": self.rationale,
        }

    @classmethod
    def from_dict(cls, d: dict) -> KindRecord:
        q = Quintuple(*(SpaceTag.parse(d[f]) for f in ("p", "c", "k", "e", "d")))
        return cls(int(d["index"]), q, ExistenceClass(d["existence"]), d["rationale"])


# Published status column, kinds 1..32 in order.
PUBLISHED_STATUS = "EOOONNNONNNENNNENNNONNNONNNENNNE"

# Kinds that pass the impossibility rule, split into constructed and open.
EXISTS_KINDS = frozenset({1, 12, 16, 28, 32})
OPEN_KINDS = frozenset({2, 3, 4, 8, 20, 24})

IMPOSSIBILITY_RULE = (
    "impossibility rule: a classical encryption or decryption algorithm would have to "
    "read or produce a quantum plaintext, ciphertext or key"
)

_EXISTS_NOTES = {
    1: "constructed: classical symmetric-key encryption (XOR one-time pad here)",
    12: "constructed: classical bit encoded in a key-selected basis, Y^k2 H^k1 |x>",
    16: "constructed: classical bit encrypted with a shared EPR pair via CNOT",
    28: "constructed: private quantum channel, Pauli one-time pad Z^k1 X^k2",
    32: "constructed: quantum message encrypted with a shared EPR pair via CNOT",
}

_OPEN_NOTES = {
    2: "open in the status table; construction sketch: ElGamal-style encryption with a "
       "quantum discrete-log solver as the decryption algorithm",
    3: "open in the status table; construction sketch: probabilistic encryption whose "
       "randomness comes from measuring a superposition of parity shares",
    4: "open; existence by lifting a classical cipher to an equivalent quantum circuit "
       "with computational-basis encoding and measurement",
    8: "open; existence by the same lift as kind 4 with the key supplied as a basis state",
    20: "open; existence by the same lift as kind 4 with a basis-state plaintext",
    24: "open; existence by the same lift as kind 4 with basis-state plaintext and key",
}


def kind_index(q: Quintuple) -> int:
    value = 0
    for tag in q.tags():
        value = (value << 1) | int(tag)
    return value + 1


def violates_impossibility_rule(q: Quintuple) -> bool:
    classical_algorithm = C in (q.encryption, q.decryption)
    quantum_object = Q in (q.plaintext, q.ciphertext, q.key)
    return classical_algorithm and quantum_object


def classify(q: Quintuple) -> ExistenceClass:
    if violates_impossibility_rule(q):
        return ExistenceClass.NOT_EXISTS
    index = kind_index(q)
    if index in EXISTS_KINDS:
        return ExistenceClass.EXISTS
    if index in OPEN_KINDS:
        return ExistenceClass.OPEN
    raise AssertionError(f"kind {index} passes the rule but has no registered status")


def explain(q: Quintuple) -> str:
    index = kind_index(q)
    if violates_impossibility_rule(q):
        quantum = [name for name, tag in zip("PCK", q.tags()[:3]) if tag is Q]
        classical = [name for name, tag in zip("ED", q.tags()[3:]) if tag is C]
        return (
            f"{IMPOSSIBILITY_RULE} ({', '.join(n + '=Q' for n in quantum)} "
            f"but {', '.join(n + '=C' for n in classical)})"
        )
    if index in EXISTS_KINDS:
        return _EXISTS_NOTES[index]
    return _OPEN_NOTES[index]


def all_quintuples() -> list[Quintuple]:
    return [Quintuple(*tags) for tags in itertools.product((C, Q), repeat=5)]


def generate_table() -> list[KindRecord]:
    rows = [KindRecord(kind_index(q), q, classify(q), explain(q)) for q in all_quintuples()]
    return sorted(rows, key=lambda r: r.index)


def existence_counts(rows) -> dict[ExistenceClass, int]:
    counts = {cls: 0 for cls in ExistenceClass}
    for r in rows:
        counts[r.existence] += 1
    return counts


def render_text(rows) -> str:
    lines = ["Kind  P C K E D  existence"]
    for r in rows:
        tags = " ".join(t.letter for t in r.quintuple.tags())
        lines.append(f"{r.index:>4}  {tags}  {r.existence.value}")
    counts = existence_counts(rows)
    lines.append(
        f"E={counts[ExistenceClass.EXISTS]} "
        f"N={counts[ExistenceClass.NOT_EXISTS]} "
        f"O={counts[ExistenceClass.OPEN]}"
    )
    return "\n".join(lines) + "\n"


def render_json(rows) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
