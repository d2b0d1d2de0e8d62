"""N-qubit state representations and constructors.

Index convention used everywhere in this package: qubit 1 is the most
significant bit of the computational-basis index, spin up maps to bit 0
and spin down to bit 1. A subset mask is an N-bit integer whose bit for
qubit j is ``1 << (n - j)``, i.e. masks align bitwise with basis indices.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NormalizationError, ResourceLimitError

NORM_TOL = 1e-10
UNITARY_TOL = 1e-12


def _frozen_complex(values, expected_len, what):
    arr = np.ascontiguousarray(values, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] != expected_len:
        raise ValueError(f"{what}: expected {expected_len} amplitudes, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class PureState:
    """Unit-norm amplitude vector over the 2^N computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        arr = _frozen_complex(self.amplitudes, 2**self.n_qubits, "PureState")
        object.__setattr__(self, "amplitudes", arr)
        norm_sq = float(np.sum(np.abs(arr) ** 2))
        if not np.isfinite(norm_sq) or abs(norm_sq - 1.0) > NORM_TOL:
            raise NormalizationError(f"state norm^2 = {norm_sq!r} outside 1 +/- {NORM_TOL}")

    @property
    def dim(self):
        return 2**self.n_qubits


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one, positive-semidefinite 2^N x 2^N operator."""

    n_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        d = 2**self.n_qubits
        arr = np.ascontiguousarray(self.entries, dtype=np.complex128)
        if arr.shape != (d, d):
            raise ValueError(f"DensityMatrix: expected shape {(d, d)}, got {arr.shape}")
        if np.max(np.abs(arr - arr.conj().T)) > 1e-10:
            raise ValueError("density matrix is not Hermitian within 1e-10")
        if abs(np.trace(arr).real - 1.0) > 1e-10 or abs(np.trace(arr).imag) > 1e-10:
            raise ValueError("density matrix trace differs from 1 by more than 1e-10")
        if np.linalg.eigvalsh(arr).min() < -1e-8:
            raise ValueError("density matrix has eigenvalue below -1e-8")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self):
        return 2**self.n_qubits


def check_unitary_2x2(u):
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise ValueError("single-qubit unitary must be 2x2")
    if np.max(np.abs(u.conj().T @ u - np.eye(2))) > UNITARY_TOL:
        raise ValueError("matrix is not unitary within 1e-12")
    return u


def make_named_state(kind, n, bitstring=None):
    """Construct one of the benchmark states.

    kind: 'ghz', 'w', 'pbell', 'product' (all spins up), or 'basis' with a
    bitstring of '0'/'1' characters (qubit 1 first, 0 = up).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = 2**n
    amps = np.zeros(dim, dtype=np.complex128)
    if kind == "ghz":
        amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    elif kind == "w":
        for j in range(n):
            amps[1 << j] = 1.0 / np.sqrt(n)
    elif kind == "pbell":
        if n % 2 != 0:
            raise ValueError("pbell requires an even number of qubits")
        pair = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.complex128) / np.sqrt(2.0)
        vec = pair
        for _ in range(n // 2 - 1):
            vec = np.kron(vec, pair)
        amps = vec
    elif kind == "product":
        amps[0] = 1.0
    elif kind == "basis":
        if bitstring is None or len(bitstring) != n or set(bitstring) - {"0", "1"}:
            raise ValueError(f"basis kind needs a length-{n} bitstring of 0/1")
        amps[int(bitstring, 2)] = 1.0
    else:
        raise ValueError(f"unknown state kind {kind!r}")
    return PureState(n, amps)


def sample_haar_state(n, rng):
    """Haar-random pure state, as a normalized complex-Gaussian vector.

    Distributionally identical to U|up...up> with U Haar on the full
    2^N-dimensional space.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 28:
        raise ResourceLimitError(f"2^{n} amplitudes exceed the memory budget")
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))


def apply_local_unitaries(state, units):
    """Apply the product of single-qubit unitaries (one per qubit)."""
    n = state.n_qubits
    if len(units) != n:
        raise ValueError(f"expected {n} unitaries, got {len(units)}")
    psi = state.amplitudes.reshape([2] * n)
    for j, u in enumerate(units):
        u = check_unitary_2x2(u)
        psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [j])), 0, j)
    return PureState(n, psi.reshape(-1))


def to_density_matrix(psi):
    """Rank-1 density matrix |psi><psi|."""
    if psi.n_qubits > 14:
        raise ResourceLimitError(f"4^{psi.n_qubits} matrix entries exceed the memory budget")
    return DensityMatrix(psi.n_qubits, np.outer(psi.amplitudes, psi.amplitudes.conj()))
