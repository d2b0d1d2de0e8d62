# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector kernels.

Mirrors the signatures in ``_kernels_py``; see ``wre.kernels`` for the
backend selection logic.
"""

import numpy as np

BACKEND = "compiled"


def apply_pair_gate(double complex[::1] vec, const double complex[:, ::1] gate,
                    Py_ssize_t pair, Py_ssize_t n_pairs):
    """Apply a 4x4 gate in place to adjacent bit pair `pair` of `vec`."""
    cdef Py_ssize_t shift = 2 * (n_pairs - 1 - pair)
    cdef Py_ssize_t stride = (<Py_ssize_t>1) << shift
    cdef Py_ssize_t block = stride << 2
    cdef Py_ssize_t n = vec.shape[0]
    cdef Py_ssize_t base, off, i0, i1, i2, i3
    cdef double complex a0, a1, a2, a3
    for base in range(0, n, block):
        for off in range(stride):
            i0 = base + off
            i1 = i0 + stride
            i2 = i1 + stride
            i3 = i2 + stride
            a0 = vec[i0]
            a1 = vec[i1]
            a2 = vec[i2]
            a3 = vec[i3]
            vec[i0] = gate[0, 0] * a0 + gate[0, 1] * a1 + gate[0, 2] * a2 + gate[0, 3] * a3
            vec[i1] = gate[1, 0] * a0 + gate[1, 1] * a1 + gate[1, 2] * a2 + gate[1, 3] * a3
            vec[i2] = gate[2, 0] * a0 + gate[2, 1] * a1 + gate[2, 2] * a2 + gate[2, 3] * a3
            vec[i3] = gate[3, 0] * a0 + gate[3, 1] * a1 + gate[3, 2] * a2 + gate[3, 3] * a3


def overlap_batch(const double complex[::1] psi, const double complex[:, :, ::1] spinors):
    """Coherent-state overlaps <n|psi> for a batch of product bras."""
    cdef Py_ssize_t n_samp = spinors.shape[0]
    cdef Py_ssize_t n_qubits = spinors.shape[1]
    cdef Py_ssize_t dim = psi.shape[0]
    out_arr = np.empty(n_samp, dtype=np.complex128)
    work_arr = np.empty(dim, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef double complex[::1] work = work_arr
    cdef Py_ssize_t s, j, i, half
    cdef double complex b0, b1
    for s in range(n_samp):
        for i in range(dim):
            work[i] = psi[i]
        half = dim
        for j in range(n_qubits):
            half >>= 1
            b0 = spinors[s, j, 0].conjugate()
            b1 = spinors[s, j, 1].conjugate()
            for i in range(half):
                work[i] = b0 * work[i] + b1 * work[half + i]
        out[s] = work[0]
    return out_arr
