"""Shot-level simulation of the two-copy measurement protocol.

Two copies of the state are prepared (interleaved qubit order: site 1
copy I, site 1 copy II, site 2 copy I, ...), each same-site pair evolves
under exp(-i V pi/8) with V = sx_I sy_II - sy_I sx_II, and the whole
register is measured in the computational basis. A shot succeeds (o = 1)
unless some site-pair reads (down, up); the success probability equals
(3 pi)^N exp(-WRE).
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .config import get_cap
from .errors import InsufficientShotsError, ResourceLimitError
from .husimi import WreEstimate

_SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)

# interleaved pair-index value flagging (copy I down, copy II up)
_SINGLET_FLAG = 0b10


@dataclass(frozen=True)
class TwoCopyState:
    """4^N amplitude vector over the doubled register, interleaved order."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if arr.shape != (4**self.n_qubits,):
            raise ValueError("two-copy amplitude count must be 4^N")
        if abs(np.sum(np.abs(arr) ** 2) - 1.0) > 1e-10:
            raise ValueError("two-copy state norm outside tolerance")
        object.__setattr__(self, "amplitudes", arr)


@dataclass(frozen=True)
class ShotSummary:
    shots: int
    successes: int
    mean_o: float
    sample_variance: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.sample_variance <= 0.25:
            raise ValueError("binary-outcome variance must lie in [0, 0.25]")


@dataclass(frozen=True)
class ProtocolEstimate:
    wre: WreEstimate
    exact_p: float | None
    variance_predicted: float | None


@lru_cache(maxsize=1)
def pair_gate():
    """exp(-i V pi/8) on one site pair, via diagonalization of V.

    Acts as the identity on |up up> and |down down> and rotates the
    {|up down>, |down up>} plane so the singlet lands on |down up>.
    """
    v = np.kron(_SX, _SY) - np.kron(_SY, _SX)
    evals, evecs = np.linalg.eigh(v)
    gate = (evecs * np.exp(-1j * evals * math.pi / 8.0)) @ evecs.conj().T
    gate.flags.writeable = False
    return gate


def _check_cap(n):
    if n > get_cap("two_copy"):
        raise ResourceLimitError(f"two-copy simulation capped at N = {get_cap('two_copy')}")


def evolve_two_copies(psi, psi_other=None):
    """psi x psi (or psi x psi_other) after the inter-copy coupling."""
    n = psi.n_qubits
    _check_cap(n)
    other = psi if psi_other is None else psi_other
    if other.n_qubits != n:
        raise ValueError("both copies must have the same qubit count")
    vec = kernels.tensor_interleaved(psi.amplitudes, other.amplitudes)
    gate = pair_gate()
    for j in range(n):
        kernels.apply_pair_gate(vec, gate, j, n)
    return TwoCopyState(n, vec)


def _success_mask(n):
    """Boolean mask over 4^N indices: True where no pair reads (down, up)."""
    keep = np.array([g != _SINGLET_FLAG for g in range(4)])
    mask = keep
    for _ in range(n - 1):
        mask = np.multiply.outer(mask, keep)
    return mask.reshape(-1)


def exact_success_probability(psi):
    """Deterministic <P> on the evolved two-copy state; equals (3 pi)^N e^-WRE."""
    state = evolve_two_copies(psi)
    probs = np.abs(state.amplitudes) ** 2
    return float(probs[_success_mask(psi.n_qubits)].sum())


def _pair_groups(indices, n):
    """(shots, n) array of 2-bit pair readouts from flat doubled indices."""
    shifts = 2 * (n - 1 - np.arange(n))
    return (indices[:, np.newaxis] >> shifts) & 3


def _sample_indices(probs, shots, rng):
    """Exact basis sampling by sequential conditional bit probabilities.

    Builds the binary tree of block sums (one pass per level), then draws
    each index bit with a fresh uniform conditioned on the bits so far.
    """
    levels = [probs]
    while levels[-1].size > 1:
        levels.append(levels[-1].reshape(-1, 2).sum(axis=1))
    levels.reverse()  # levels[k] has 2^k block sums
    idx = np.zeros(shots, dtype=np.int64)
    for k in range(1, len(levels)):
        parent = levels[k - 1][idx]
        left = levels[k][2 * idx]
        with np.errstate(invalid="ignore", divide="ignore"):
            p_left = np.where(parent > 0, left / parent, 0.0)
        bit = (rng.random(shots) >= p_left).astype(np.int64)
        idx = 2 * idx + bit
    return idx


def _summarize(outcomes, seed):
    shots = outcomes.size
    successes = int(outcomes.sum())
    mean_o = successes / shots
    return ShotSummary(shots=shots, successes=successes, mean_o=mean_o,
                       sample_variance=mean_o - mean_o * mean_o, seed=seed)


def sample_shots(psi, shots, seed):
    """Simulate `shots` protocol repetitions on a pure state."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    state = evolve_two_copies(psi)
    probs = np.abs(state.amplitudes) ** 2
    rng = np.random.default_rng(seed)
    idx = _sample_indices(probs, shots, rng)
    outcomes = ~np.any(_pair_groups(idx, psi.n_qubits) == _SINGLET_FLAG, axis=1)
    return _summarize(outcomes, seed)


def sample_shots_ensemble(weights, states, shots, seed):
    """Protocol shots for a mixed state given as an ensemble {(p_i, psi_i)}.

    Each shot draws independent ensemble members for the two copies, which
    realizes rho x rho exactly in distribution without 16^N evolution.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or len(states) != weights.size:
        raise ValueError("weights and states must have matching lengths")
    if abs(weights.sum() - 1.0) > 1e-10 or (weights < 0).any():
        raise ValueError("ensemble weights must be a probability vector")
    rng = np.random.default_rng(seed)
    pair_probs = np.outer(weights, weights).reshape(-1)
    counts = rng.multinomial(shots, pair_probs).reshape(weights.size, weights.size)
    outcomes = []
    for i in range(weights.size):
        for j in range(weights.size):
            if counts[i, j] == 0:
                continue
            state = evolve_two_copies(states[i], states[j])
            probs = np.abs(state.amplitudes) ** 2
            idx = _sample_indices(probs, int(counts[i, j]), rng)
            outcomes.append(~np.any(_pair_groups(idx, states[i].n_qubits)
                                    == _SINGLET_FLAG, axis=1))
    return _summarize(np.concatenate(outcomes), seed)


def wre_protocol(psi, shots, seed):
    """WRE estimate N ln(3 pi) - ln(mean_o) plus the predicted shot variance."""
    summary = sample_shots(psi, shots, seed)
    if summary.mean_o == 0.0:
        raise InsufficientShotsError(shots)
    n = psi.n_qubits
    p_hat = summary.mean_o
    second_moment = p_hat / (3.0 * math.pi) ** n
    # delta method on -ln(p_hat) with binomial standard error
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / shots) / p_hat
    wre = WreEstimate(value=-math.log(second_moment), second_moment=second_moment,
                      std_error_value=std_error, method="protocol",
                      samples=shots, seed=seed)
    exact_p = None
    variance_predicted = None
    if n <= get_cap("two_copy"):
        exact_p = exact_success_probability(psi)
        variance_predicted = exact_p - exact_p * exact_p
    return ProtocolEstimate(wre=wre, exact_p=exact_p,
                            variance_predicted=variance_predicted)
