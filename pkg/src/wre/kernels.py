"""Backend selection and a thin facade over the hot statevector kernels.

The compiled Cython backend is preferred; the pure-numpy fallback is used
when the extension is missing or when WRE_PURE_PYTHON=1 is set. Both
backends implement identical semantics (see tests/test_kernels.py).
"""

import os

import numpy as np

if os.environ.get("WRE_PURE_PYTHON", "") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

# Cap on elements touched per overlap_batch call; keeps the numpy backend's
# intermediate (chunk, 2^N) arrays bounded.
_CHUNK_ELEMS = 1 << 22


def apply_pair_gate(vec, gate, pair, n_pairs):
    """Apply a 4x4 `gate` in place to adjacent bit pair `pair` of `vec`.

    `vec` must be a contiguous complex128 array of length 4**n_pairs with
    pair 0 on the two most significant index bits.
    """
    _impl.apply_pair_gate(vec, np.ascontiguousarray(gate, dtype=np.complex128),
                          pair, n_pairs)


def overlap_batch(psi, spinors):
    """<n|psi> for a batch of product coherent bras, shape (samples,).

    spinors: (samples, n_qubits, 2) ket components of each |n_j>.
    """
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    spinors = np.ascontiguousarray(spinors, dtype=np.complex128)
    n_samp = spinors.shape[0]
    chunk = max(1, _CHUNK_ELEMS // max(psi.shape[0], 1))
    if n_samp <= chunk:
        return _impl.overlap_batch(psi, spinors)
    out = np.empty(n_samp, dtype=np.complex128)
    for lo in range(0, n_samp, chunk):
        hi = min(lo + chunk, n_samp)
        out[lo:hi] = _impl.overlap_batch(psi, np.ascontiguousarray(spinors[lo:hi]))
    return out


def tensor_interleaved(a, b):
    """Two-copy product vector with site-interleaved qubit order.

    For N-qubit inputs returns the 4**N vector indexed by bits
    (site1 copyI, site1 copyII, site2 copyI, ...).
    """
    n = a.size.bit_length() - 1
    outer = np.multiply.outer(a, b).reshape([2] * (2 * n))
    perm = []
    for j in range(n):
        perm.extend((j, n + j))
    return np.ascontiguousarray(outer.transpose(perm).reshape(-1))
