"""Seeded random states for property checks and Monte Carlo trials."""

import numpy as np

from qske.qsim.rng import RandomSource
from qske.qsim.states import DensityMatrix, StateVector


def random_state(num_qubits: int, rng: RandomSource) -> StateVector:
    d = 1 << num_qubits
    v = rng.normal(d) + 1j * rng.normal(d)
    return StateVector(v / np.linalg.norm(v))


def random_density(num_qubits: int, rng: RandomSource) -> DensityMatrix:
    """Ginibre-distributed mixed state."""
    d = 1 << num_qubits
    g = rng.normal((d, d)) + 1j * rng.normal((d, d))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho).real)
