"""Pure-numpy implementations of the hot statevector kernels.

Same call signatures as the compiled backend in ``_kernels_cy.pyx``; the
active backend is chosen in ``wre.kernels`` at import time.
"""

import numpy as np

BACKEND = "python"


def apply_pair_gate(vec, gate, pair, n_pairs):
    """Apply a 4x4 gate in place to adjacent bit pair `pair` of `vec`.

    `vec` has length 4**n_pairs; pair 0 occupies the two most significant
    index bits.
    """
    lead = 4**pair
    v = vec.reshape(lead, 4, -1)
    v[:] = np.einsum("ab,ibk->iak", gate, v, optimize=True)


def overlap_batch(psi, spinors):
    """Coherent-state overlaps <n|psi> for a batch of product bras.

    spinors has shape (samples, n_qubits, 2) and holds the ket components
    of each single-qubit state |n_j>; the conjugation for the bra happens
    here. Returns a complex array of shape (samples,).
    """
    n = spinors.shape[1]
    bras = spinors.conj()
    cur = np.broadcast_to(psi, (spinors.shape[0], psi.shape[0]))
    for j in range(n):
        half = cur.shape[1] // 2
        cur = bras[:, j, 0:1] * cur[:, :half] + bras[:, j, 1:2] * cur[:, half:]
    return np.ascontiguousarray(cur[:, 0])
