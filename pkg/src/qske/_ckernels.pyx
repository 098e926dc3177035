# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Hermitian Jacobi eigenvalues and gate application."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()

ctypedef double complex cplx


cdef inline double cabs2(cplx z) nogil:
    return z.real * z.real + z.imag * z.imag


def hermitian_eigvalsh(a, double tol=1e-14, int max_sweeps=100):
    cdef cplx[:, ::1] m = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double off, total, scale, ag, tau, t, c, s
    cdef cplx g, ph, phc, xp, xq
    if n == 1:
        return np.array([m[0, 0].real])
    total = 0.0
    for p in range(n):
        for q in range(n):
            total += cabs2(m[p, q])
    scale = sqrt(total)
    if scale < 1.0:
        scale = 1.0
    with nogil:
        for sweep in range(max_sweeps):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += cabs2(m[p, q])
            if sqrt(off) <= tol * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    g = m[p, q]
                    ag = sqrt(cabs2(g))
                    if ag <= 1e-300:
                        continue
                    ph = g / ag
                    phc = ph.conjugate()
                    tau = (m[q, q].real - m[p, p].real) / (2.0 * ag)
                    if fabs(tau) > 1e150:
                        t = 0.5 / tau
                    elif tau >= 0:
                        t = 1.0 / (tau + sqrt(tau * tau + 1.0))
                    else:
                        t = -1.0 / (-tau + sqrt(tau * tau + 1.0))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        xp = m[k, p]
                        xq = m[k, q]
                        m[k, p] = c * xp - s * phc * xq
                        m[k, q] = s * xp + c * phc * xq
                    for k in range(n):
                        xp = m[p, k]
                        xq = m[q, k]
                        m[p, k] = c * xp - s * ph * xq
                        m[q, k] = s * xp + c * ph * xq
                    m[p, q] = 0.0
                    m[q, p] = 0.0
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    for p in range(n):
        o[p] = m[p, p].real
    out.sort()
    return out


def apply_gate(psi, gate, targets, int num_qubits):
    cdef const cplx[:, ::1] src = np.ascontiguousarray(psi, dtype=np.complex128)
    cdef const cplx[:, ::1] u = np.ascontiguousarray(gate, dtype=np.complex128)
    cdef Py_ssize_t dim = src.shape[0]
    cdef Py_ssize_t cols = src.shape[1]
    cdef Py_ssize_t k = len(targets)
    cdef Py_ssize_t gd = 1 << k
    result = np.empty((dim, cols), dtype=np.complex128)
    cdef cplx[:, ::1] dst = result
    offs_arr = np.zeros(gd, dtype=np.intp)
    cdef Py_ssize_t[::1] offs = offs_arr
    cdef Py_ssize_t mask = 0
    cdef Py_ssize_t j, b, base, col, r, c_
    cdef cplx acc
    for b in range(k):
        mask |= (<Py_ssize_t>1) << (num_qubits - 1 - <Py_ssize_t>targets[b])
    for j in range(gd):
        for b in range(k):
            if (j >> (k - 1 - b)) & 1:
                offs[j] |= (<Py_ssize_t>1) << (num_qubits - 1 - <Py_ssize_t>targets[b])
    with nogil:
        for base in range(dim):
            if base & mask:
                continue
            for col in range(cols):
                for r in range(gd):
                    acc = 0
                    for c_ in range(gd):
                        acc = acc + u[r, c_] * src[base + offs[c_], col]
                    dst[base + offs[r], col] = acc
    return result
