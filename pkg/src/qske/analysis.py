"""Numerical checks of secrecy, correctness and the independent-key failure."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from qske import protocols as P
from qske.protocols.kind2 import smallest_generator
from qske.qsim import (
    DensityMatrix,
    RandomSource,
    StateVector,
    apply_unitary,
    bell_state,
    partial_trace,
    plus,
    random_density,
    standard_gate,
    tensor,
    trace_distance,
)
from qske.report import TrialReport
from qske.taxonomy import Quintuple, classify, explain

SUPPORTED_MIXTURE_KINDS = (12, 28)
TRIAL_KINDS = P.IMPLEMENTED_KINDS


class UnsupportedKindError(ValueError):
    pass


def unsupported(kind: int, allowed) -> UnsupportedKindError:
    msg = f"kind {kind} is not supported here (supported: {', '.join(map(str, allowed))})"
    if 1 <= kind <= 32:
        q = Quintuple.from_index(kind)
        msg += f"; kind {kind} is {classify(q).label}: {explain(q)}"
    return UnsupportedKindError(msg)


@dataclass
class MixtureReport:
    kind: int
    plaintext_descriptor: str
    averaged_ciphertext: DensityMatrix
    distance_to_maximally_mixed: float
    key_count_or_samples: int


def _as_density(plaintext) -> DensityMatrix:
    if isinstance(plaintext, DensityMatrix):
        return plaintext
    if isinstance(plaintext, StateVector):
        return plaintext.density()
    return StateVector.basis([P.common.check_bit(plaintext)]).density()


def average_ciphertext(kind: int, plaintext) -> MixtureReport:
    """Exact uniform average of the ciphertext over all four two-bit keys."""
    keys = P.PqcKey.all()
    if kind == 28:
        rho = _as_density(plaintext)
        if rho.num_qubits != 1:
            raise ValueError("plaintext must be one qubit")
        cts = [P.kind28_encrypt(rho, k).entries for k in keys]
        descriptor = "one-qubit density matrix"
    elif kind == 12:
        x = P.common.check_bit(plaintext)
        cts = [P.kind12_encrypt(x, k).density().entries for k in keys]
        descriptor = f"bit {x}"
    else:
        raise unsupported(kind, SUPPORTED_MIXTURE_KINDS)
    avg = DensityMatrix(sum(cts) / len(cts))
    dist = trace_distance(avg, DensityMatrix.maximally_mixed(1))
    return MixtureReport(kind, descriptor, avg, dist, len(keys))


# Shared register for both key demos: qubit 0 = Bob's key, 1 = Alice's key, 2 = message.
BOB, ALICE, MESSAGE = 0, 1, 2
KEY_CIRCUIT = (
    ("encrypt", "CNOT", (ALICE, MESSAGE)),
    ("decrypt", "CNOT", (BOB, MESSAGE)),
)


@dataclass
class FailureDemoReport:
    name: str
    message: int
    gate_sequence: tuple
    stage_states: list[tuple[str, StateVector | DensityMatrix]]
    final_reduced: DensityMatrix
    distance_to_plaintext: float
    distance_to_maximally_mixed: float
    notes: list[str] = field(default_factory=list)

    @property
    def decryption_succeeded(self) -> bool:
        return self.distance_to_plaintext <= 1e-9

    @property
    def verdict(self) -> str:
        return "decryption succeeded" if self.decryption_succeeded else "decryption failed"

    def stage(self, name: str):
        return dict(self.stage_states)[name]


def _run_key_circuit(initial: StateVector) -> list[StateVector]:
    states = []
    s = initial
    for _, gate, targets in KEY_CIRCUIT:
        s = apply_unitary(s, standard_gate(gate), targets)
        states.append(s)
    return states


def _finish(name, m, stages, last) -> FailureDemoReport:
    final = partial_trace(last.density(), [MESSAGE])
    plaintext = StateVector.basis([m]).density()
    return FailureDemoReport(
        name=name,
        message=m,
        gate_sequence=tuple((g, t) for _, g, t in KEY_CIRCUIT),
        stage_states=stages,
        final_reduced=final,
        distance_to_plaintext=trace_distance(final, plaintext),
        distance_to_maximally_mixed=trace_distance(final, DensityMatrix.maximally_mixed(1)),
        notes=["maximally mixed state is I/2 (unit trace)"],
    )


def independent_key_demo(m: int = 0) -> FailureDemoReport:
    """Both parties hold their own |+> as the "key"; decryption loses the message."""
    m = P.common.check_bit(m)
    initial = tensor(tensor(plus(), plus()), StateVector.basis([m]))
    encrypted, decrypted = _run_key_circuit(initial)
    # Bob's |+> is still a product factor after encryption; split it off.
    alice_side = encrypted.amplitudes.reshape(2, 4)
    alice_side = (alice_side[0] + alice_side[1]) / np.sqrt(2)
    stages = [
        ("initial", initial),
        ("alice_key_and_ciphertext", StateVector(alice_side)),
        ("after_encryption", encrypted),
        ("after_decryption", decrypted),
    ]
    return _finish("independent-key-failure", m, stages, decrypted)


def entangled_key_contrast(m: int = 0) -> FailureDemoReport:
    """Same circuit with a shared Bell pair as the key; decryption recovers |m>."""
    m = P.common.check_bit(m)
    initial = tensor(bell_state(), StateVector.basis([m]))
    encrypted, decrypted = _run_key_circuit(initial)
    stages = [
        ("initial", initial),
        ("after_encryption", encrypted),
        ("after_decryption", decrypted),
    ]
    return _finish("entangled-key-contrast", m, stages, decrypted)


DEMOS = {
    "independent-key-failure": independent_key_demo,
    "entangled-key-contrast": entangled_key_contrast,
}


def _plaintext_bits(plaintext, length: int, rng: RandomSource):
    return P.parse_bits(plaintext) if plaintext is not None else rng.bits(length)


def correctness_trial(
    kind: int,
    trials: int,
    seed: int = 0,
    *,
    plaintext=None,
    key=None,
    t: int = 3,
    mode: str = P.SAMPLED,
    q: int = 11,
    g: int | None = None,
    s: int | None = None,
    mismatched_keys: bool = False,
) -> TrialReport:
    """Seeded encrypt/decrypt trials with a fresh key per trial unless ``key`` is fixed.

    Trial ``i`` draws from ``RandomSource(seed).derive(i)``, so results do not
    depend on execution order.
    """
    if kind not in TRIAL_KINDS:
        raise unsupported(kind, TRIAL_KINDS)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if mismatched_keys and kind != 12:
        raise ValueError("mismatched-key trials are only defined for kind 12")
    root = RandomSource(seed)
    params: dict[str, str] = {}
    notes = ""
    successes = 0
    max_td = None

    if kind == 2:
        g = smallest_generator(q) if g is None else g
        params.update(q=str(q), g=str(g))

    for i in range(trials):
        rng = root.derive(i)
        if kind == 1:
            m = _plaintext_bits(plaintext, 4, rng)
            k = P.parse_bits(key) if key is not None else rng.bits(len(m))
            c = P.kind1_encrypt(m, k)
            ok = P.kind1_decrypt(c, k) == m
            if i == 0:
                params.update(ciphertext=P.format_bits(c))
        elif kind == 2:
            ek = P.ElGamalKey.from_secret(q, g, s) if s is not None else P.ElGamalKey.random(q, g, rng)
            m = int(plaintext) if plaintext is not None else rng.integers(1, q)
            c = P.kind2_encrypt(m, ek, rng)
            ok = P.kind2_decrypt(c, ek) == m
            if i == 0:
                params.update(h=str(ek.h), c1=str(c.c1), c2=str(c.c2))
        elif kind == 3:
            k = P.parse_bits(key) if key is not None else rng.bits(t)
            p3 = P.Kind3Params(t, k, mode)
            x = P.common.check_bit(int(plaintext)) if plaintext is not None else rng.bit()
            c = P.kind3_encrypt(x, p3, rng)
            ok = P.kind3_decrypt(c, p3) == x
            if i == 0:
                params.update(t=str(t), mode=mode, ciphertext=P.format_bits(c))
        elif kind == 12:
            x = P.common.check_bit(int(plaintext)) if plaintext is not None else rng.bit()
            enc_key = P.PqcKey.parse(key) if key is not None else P.PqcKey.random(rng)
            dec_key = P.PqcKey.random(rng) if mismatched_keys else enc_key
            ok = P.kind12_decrypt(P.kind12_encrypt(x, enc_key), dec_key, rng).bit == x
        elif kind == 16:
            x = P.common.check_bit(int(plaintext)) if plaintext is not None else rng.bit()
            handle = P.kind16_setup()
            res = P.kind16_decrypt(P.kind16_encrypt(x, handle), handle, rng)
            ok = res.bit == x and abs(res.probability - 1.0) <= 1e-9
        elif kind in (28, 32):
            rho = _as_density(int(plaintext)) if plaintext is not None else random_density(1, rng)
            if kind == 28:
                k = P.PqcKey.parse(key) if key is not None else P.PqcKey.random(rng)
                out = P.kind28_decrypt(P.kind28_encrypt(rho, k), k)
            else:
                handle = P.kind32_setup()
                out = P.kind32_decrypt(P.kind32_encrypt(rho, handle), handle)
            td = trace_distance(out, rho)
            max_td = td if max_td is None else max(max_td, td)
            ok = td <= 1e-10
        else:
            m = _plaintext_bits(plaintext, 4, rng)
            k = P.parse_bits(key) if key is not None else rng.bits(len(m))
            rep = P.lift_classical(kind, m, k, rng)
            ok = rep.all_succeeded
            if i == 0:
                params.update(ciphertext=rep.parameters["ciphertext"])
            notes = "routed through the classical-cipher lift"
        successes += int(ok)

    params.setdefault("plaintext", "random" if plaintext is None else str(plaintext))
    if kind == 2 and s is not None:
        params["key"] = f"s={s}"
    params.setdefault("key", "random per trial" if key is None else str(key))
    if mismatched_keys:
        params["key"] = "independent encryption and decryption keys"
    return TrialReport(
        kind=kind,
        parameters=params,
        seed=seed,
        algorithm_id=root.algorithm_id,
        trials=trials,
        successes=successes,
        max_trace_distance=max_td,
        notes=notes,
    )
