"""Standard gates and a few named states."""

import numpy as np

from qske.qsim.states import StateVector, UnitaryOperator

_SQ2 = 1 / np.sqrt(2)

_GATES = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.array([[1, 0], [0, -1]]),
    "H": np.array([[1, 1], [1, -1]]) * _SQ2,
    # control is the first target, target the second
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
}


def standard_gate(name: str) -> UnitaryOperator:
    try:
        return UnitaryOperator(_GATES[name.upper()])
    except KeyError:
        raise ValueError(f"unknown gate {name!r}; expected one of {sorted(_GATES)}") from None


def bell_state() -> StateVector:
    """(|00> + |11>)/sqrt(2)."""
    return StateVector(np.array([_SQ2, 0, 0, _SQ2]))


def plus() -> StateVector:
    return StateVector(np.array([_SQ2, _SQ2]))


def minus() -> StateVector:
    return StateVector(np.array([_SQ2, -_SQ2]))
