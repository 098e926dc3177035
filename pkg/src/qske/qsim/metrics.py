"""Distances between states."""

import numpy as np

from qske import _backend
from qske.qsim.states import DensityMatrix, StateVector


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """Half the sum of absolute eigenvalues of ``a - b``, clipped to [0, 1]."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    diff = a.entries - b.entries
    eig = _backend.hermitian_eigvalsh((diff + diff.conj().T) / 2)
    return float(min(1.0, max(0.0, 0.5 * np.sum(np.abs(eig)))))


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = 1e-9) -> bool:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    overlap = np.vdot(b.amplitudes, a.amplitudes)
    if abs(overlap) == 0:
        return False
    # the phase minimizing ||a - c b|| aligns b with a
    c = overlap / abs(overlap)
    return bool(np.linalg.norm(a.amplitudes - c * b.amplitudes) <= tol)


def max_entry_distance(a, b) -> float:
    """Largest entrywise modulus of the difference of two states of the same kind."""
    x = a.amplitudes if isinstance(a, StateVector) else a.entries
    y = b.amplitudes if isinstance(b, StateVector) else b.entries
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return float(np.max(np.abs(x - y)))
