"""Pure-Python/numpy versions of the hot kernels.

Same signatures and semantics as the compiled ``_ckernels`` module; used
when the extension is not built or ``QSKE_PURE_PYTHON=1`` is set.
"""

import math

import numpy as np


def hermitian_eigvalsh(a, tol=1e-14, max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns the eigenvalues sorted ascending. ``a`` is not modified.
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    scale = max(1.0, float(np.sqrt(np.sum(np.abs(a) ** 2))))
    for _ in range(max_sweeps):
        off = np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2)
        if math.sqrt(max(off, 0.0)) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                ag = abs(g)
                if ag <= 1e-300:
                    continue
                ph = g / ag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * ag)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * ph.conjugate() * colq
                a[:, q] = s * colp + c * ph.conjugate() * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * ph * rowq
                a[q, :] = s * rowp + c * ph * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
    return np.sort(np.diag(a).real)


def apply_gate(psi, gate, targets, num_qubits):
    """Apply a ``k``-qubit gate to the row index of ``psi`` (shape ``(2**n, m)``).

    ``targets[0]`` is the most significant qubit of the gate's local index;
    qubit 0 of the register is the most significant bit of the row index.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    k = len(targets)
    m = psi.shape[1]
    tensor = psi.reshape((2,) * num_qubits + (m,))
    g = np.asarray(gate, dtype=np.complex128).reshape((2,) * (2 * k))
    out = np.tensordot(g, tensor, axes=(list(range(k, 2 * k)), list(targets)))
    # tensordot puts the gate's output axes first; move them back in place.
    out = np.moveaxis(out, list(range(k)), list(targets))
    return np.ascontiguousarray(out.reshape(psi.shape))
