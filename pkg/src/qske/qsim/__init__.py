"""Dense simulator for small qubit registers (up to 10 qubits)."""

from qske.qsim.gates import bell_state, minus, plus, standard_gate
from qske.qsim.measure import (
    MeasurementRecord,
    measure_computational,
    measure_in_basis,
    outcome_probabilities,
    project,
)
from qske.qsim.metrics import equal_up_to_global_phase, max_entry_distance, trace_distance
from qske.qsim.random_states import random_density, random_state
from qske.qsim.rng import RandomSource
from qske.qsim.states import (
    MAX_QUBITS,
    DensityMatrix,
    StateVector,
    UnitaryOperator,
    apply_unitary,
    identity,
    partial_trace,
    tensor,
)

__all__ = [
    "MAX_QUBITS",
    "DensityMatrix",
    "MeasurementRecord",
    "RandomSource",
    "StateVector",
    "UnitaryOperator",
    "apply_unitary",
    "bell_state",
    "equal_up_to_global_phase",
    "identity",
    "max_entry_distance",
    "measure_computational",
    "measure_in_basis",
    "minus",
    "outcome_probabilities",
    "partial_trace",
    "plus",
    "project",
    "random_density",
    "random_state",
    "standard_gate",
    "tensor",
    "trace_distance",
]
