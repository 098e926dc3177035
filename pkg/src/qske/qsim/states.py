"""Dense state and operator types with composition, conjugation and reduction.

Qubit 0 is the most significant bit of the basis index throughout, so
``|q0 q1 ... q(n-1)>`` is basis index ``int("q0q1...", 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qske import _backend

MAX_QUBITS = 10
STATE_TOL = 1e-9
UNITARY_TOL = 1e-10


def _num_qubits_for(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    if n > MAX_QUBITS:
        raise ValueError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit register cap")
    return n


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state of ``num_qubits`` qubits."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = _frozen(np.ravel(self.amplitudes))
        object.__setattr__(self, "amplitudes", amp)
        _num_qubits_for(amp.size)
        norm = float(np.sum(np.abs(amp) ** 2))
        if abs(norm - 1.0) > STATE_TOL:
            raise ValueError(f"state is not normalized (norm^2 = {norm!r})")

    @property
    def num_qubits(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis(cls, bits) -> StateVector:
        """Computational basis state from a bit sequence or a ``"0101"`` string."""
        bits = [int(b) for b in bits]
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a bit string: {bits}")
        amp = np.zeros(1 << len(bits), dtype=np.complex128)
        amp[int("".join(map(str, bits)) or "0", 2)] = 1.0
        return cls(amp)

    def density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def __repr__(self):
        return f"StateVector(num_qubits={self.num_qubits}, amplitudes={self.amplitudes.tolist()})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on ``num_qubits`` qubits."""

    entries: np.ndarray

    def __post_init__(self):
        rho = _frozen(self.entries)
        object.__setattr__(self, "entries", rho)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {rho.shape}")
        _num_qubits_for(rho.shape[0])
        if np.max(np.abs(rho - rho.conj().T)) > STATE_TOL:
            raise ValueError("density matrix is not Hermitian")
        tr = np.trace(rho)
        if abs(tr - 1.0) > STATE_TOL:
            raise ValueError(f"density matrix trace is {tr!r}, expected 1")
        lowest = _backend.hermitian_eigvalsh((rho + rho.conj().T) / 2)[0]
        if lowest < -STATE_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {lowest!r}")

    @property
    def num_qubits(self) -> int:
        return self.entries.shape[0].bit_length() - 1

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def maximally_mixed(cls, num_qubits: int = 1) -> DensityMatrix:
        d = 1 << num_qubits
        return cls(np.eye(d) / d)

    def eigenvalues(self) -> np.ndarray:
        return _backend.hermitian_eigvalsh(self.entries)

    def __repr__(self):
        return f"DensityMatrix(num_qubits={self.num_qubits}, entries={self.entries.tolist()})"


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    """Unitary matrix on ``num_qubits`` qubits (``U U^dagger = I`` within 1e-10)."""

    entries: np.ndarray

    def __post_init__(self):
        u = _frozen(self.entries)
        object.__setattr__(self, "entries", u)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError(f"operator must be square, got shape {u.shape}")
        _num_qubits_for(u.shape[0])
        if np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) > UNITARY_TOL:
            raise ValueError("operator is not unitary")

    @property
    def num_qubits(self) -> int:
        return self.entries.shape[0].bit_length() - 1

    def dagger(self) -> UnitaryOperator:
        return UnitaryOperator(self.entries.conj().T)

    def __matmul__(self, other: UnitaryOperator) -> UnitaryOperator:
        if not isinstance(other, UnitaryOperator):
            return NotImplemented
        return UnitaryOperator(self.entries @ other.entries)

    def __pow__(self, k: int) -> UnitaryOperator:
        return UnitaryOperator(np.linalg.matrix_power(self.entries, int(k)))


def identity(num_qubits: int) -> UnitaryOperator:
    return UnitaryOperator(np.eye(1 << num_qubits))


def tensor(a, b):
    """Kronecker product; ``a``'s qubits come first in the result."""
    if type(a) is not type(b):
        raise TypeError(f"cannot tensor {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, StateVector):
        return StateVector(np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, DensityMatrix):
        return DensityMatrix(np.kron(a.entries, b.entries))
    if isinstance(a, UnitaryOperator):
        return UnitaryOperator(np.kron(a.entries, b.entries))
    raise TypeError(f"unsupported operand type {type(a).__name__}")


def _check_targets(targets, num_qubits: int, arity: int) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if len(set(targets)) != len(targets):
        raise ValueError(f"repeated target index in {targets}")
    if any(t < 0 or t >= num_qubits for t in targets):
        raise ValueError(f"target out of range for {num_qubits} qubits: {targets}")
    if len(targets) != arity:
        raise ValueError(f"{arity}-qubit operator given {len(targets)} targets")
    return targets


def apply_unitary(state, u: UnitaryOperator, targets):
    """Apply ``u`` to ``targets`` (first target = most significant gate qubit)."""
    n = state.num_qubits
    targets = _check_targets(targets, n, u.num_qubits)
    if isinstance(state, StateVector):
        col = state.amplitudes.reshape(-1, 1)
        return StateVector(_backend.apply_gate(col, u.entries, targets, n).ravel())
    if isinstance(state, DensityMatrix):
        left = _backend.apply_gate(state.entries, u.entries, targets, n)
        both = _backend.apply_gate(left.conj().T, u.entries, targets, n).conj().T
        return DensityMatrix((both + both.conj().T) / 2)
    raise TypeError(f"cannot apply a unitary to {type(state).__name__}")


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduce ``rho`` to the qubits in ``keep``, in the order listed."""
    n = rho.num_qubits
    keep = tuple(int(k) for k in keep)
    if not keep:
        raise ValueError("keep list is empty")
    if len(set(keep)) != len(keep) or any(k < 0 or k >= n for k in keep):
        raise ValueError(f"invalid keep list {keep} for {n} qubits")
    traced = [q for q in range(n) if q not in keep]
    t = rho.entries.reshape((2,) * (2 * n))
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    row = list(letters[:n])
    col = list(letters[n:2 * n])
    for q in traced:
        col[q] = row[q]
    out = "".join(row[k] for k in keep) + "".join(col[k] for k in keep)
    reduced = np.einsum("".join(row) + "".join(col) + "->" + out, t)
    d = 1 << len(keep)
    reduced = reduced.reshape(d, d)
    return DensityMatrix((reduced + reduced.conj().T) / 2)
