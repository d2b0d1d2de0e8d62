"""Haar sampling over single-qubit unitaries and twirl-based estimators.

Includes numerical checks of the Haar-integral calculus used by the exact
identity: the two-point integral, the four-point projector form
(I + W)/6, and the Weingarten reconstruction of the twirling channel.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import EstimatorError
from .husimi import (MC_CHUNK, WreEstimate, _prob_batch, _worker_rngs,
                     _worker_shares, wre_from_moment, MomentEstimate)

_I2 = np.eye(2, dtype=np.complex128)
_I4 = np.eye(4, dtype=np.complex128)
# swap on the doubled single-qubit space: W|s s'> = |s' s>
_W4 = np.array([[1, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 1, 0, 0],
                [0, 0, 0, 1]], dtype=np.complex128)


def q_matrix(d=2):
    """Gram matrix Tr(pi pi') of the permutation operators {I, W}."""
    return np.array([[d * d, d], [d, d * d]], dtype=float)


def weingarten_matrix(d=2):
    """Fourth-moment coefficients C = Q^-1; [[1/3, -1/6], [-1/6, 1/3]] at d=2."""
    return np.linalg.inv(q_matrix(d))


def sample_su2_batch(rng, size):
    """(size, 2, 2) Haar unitaries by Gram-Schmidt on complex Gaussians.

    Gram-Schmidt produces an R factor with positive diagonal, which is
    exactly the phase convention under which QR of a Ginibre matrix is
    Haar distributed.
    """
    z = rng.standard_normal((size, 2, 2)) + 1j * rng.standard_normal((size, 2, 2))
    c0 = z[:, :, 0]
    c1 = z[:, :, 1]
    q0 = c0 / np.linalg.norm(c0, axis=1, keepdims=True)
    c1 = c1 - np.sum(q0.conj() * c1, axis=1, keepdims=True) * q0
    q1 = c1 / np.linalg.norm(c1, axis=1, keepdims=True)
    return np.stack([q0, q1], axis=2)


def sample_su2(rng):
    """One Haar-distributed 2x2 unitary."""
    return sample_su2_batch(rng, 1)[0]


def wre_twirl(state, samples, seed, workers=1):
    """WRE via the local-twirl average pi^-N E[<up..up|U! rho U|up..up>^2].

    The rotated reference state U|up..up> is a product coherent state, so
    the inner expectation reuses the coherent-overlap kernel with spinors
    given by the first columns of the sampled unitaries.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    n = state.n_qubits
    prefactor = math.pi ** (-n)
    total = 0.0
    total_sq = 0.0
    for rng, share in zip(_worker_rngs(seed, workers), _worker_shares(samples, workers)):
        done = 0
        while done < share:
            m = min(MC_CHUNK, share - done)
            units = sample_su2_batch(rng, m * n).reshape(m, n, 2, 2)
            spinors = np.ascontiguousarray(units[:, :, :, 0])
            p = _prob_batch(state, spinors)
            if not np.all(np.isfinite(p)):
                raise EstimatorError("non-finite twirl integrand encountered")
            w = prefactor * p * p
            total += float(w.sum())
            total_sq += float((w * w).sum())
            done += m
    mean = total / samples
    var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    est = MomentEstimate(mean=mean, std_error=math.sqrt(var / samples),
                         samples=samples, seed=seed)
    return wre_from_moment(est, method="twirl")


@dataclass(frozen=True)
class MomentCheckReport:
    kind: str
    max_abs_deviation: float
    per_entry_sigma: float
    samples: int
    seed: int
    pass_: bool


class _EntryAccumulator:
    """Streaming per-entry mean and standard error for complex tensors."""

    def __init__(self, shape):
        self.count = 0
        self.sum = np.zeros(shape, dtype=np.complex128)
        self.sum_re2 = np.zeros(shape)
        self.sum_im2 = np.zeros(shape)

    def add(self, batch):
        self.count += batch.shape[0]
        self.sum += batch.sum(axis=0)
        self.sum_re2 += (batch.real**2).sum(axis=0)
        self.sum_im2 += (batch.imag**2).sum(axis=0)

    def mean(self):
        return self.sum / self.count

    def std_error(self):
        m = self.mean()
        var = (self.sum_re2 / self.count - m.real**2
               + self.sum_im2 / self.count - m.imag**2)
        return np.sqrt(np.maximum(var, 0.0) / self.count)


def _two_point_batch(units):
    # E[(u^dag)_{ab} (u)_{cd}] sample tensor, shape (m, 2, 2, 2, 2)
    return np.einsum("sba,scd->sabcd", units.conj(), units)


def _four_point_state_batch(units):
    v = units[:, :, 0]
    w = np.einsum("sa,sb->sab", v, v).reshape(-1, 4)
    return np.einsum("sa,sb->sab", w, w.conj())


def _channel_batch(units, probe):
    u4 = np.einsum("sik,sjl->sijkl", units, units).reshape(-1, 4, 4)
    return u4 @ probe @ u4.conj().transpose(0, 2, 1)


def channel_target(probe):
    """Weingarten prediction for the twirl channel E[(u x u) X (u! x u!)]."""
    c = weingarten_matrix(2)
    ops = [_I4, _W4]
    out = np.zeros((4, 4), dtype=np.complex128)
    for i, sigma in enumerate(ops):
        for j, pi in enumerate(ops):
            out += c[i, j] * np.trace(probe @ pi) * sigma
    return out


def two_point_target():
    return 0.5 * np.einsum("ad,bc->abcd", _I2, _I2)


def four_point_state_target():
    return (_I4 + _W4) / 6.0


def haar_moment_check(kind, samples, seed, probe=None):
    """Monte Carlo check of a Haar-moment identity; 4-sigma decision rule."""
    if samples < 1000:
        raise ValueError("samples must be >= 1000 for a meaningful check")
    if kind == "two-point":
        target = two_point_target()
        make = _two_point_batch
    elif kind == "four-point-state":
        target = four_point_state_target()
        make = _four_point_state_batch
    elif kind == "weingarten-channel":
        if probe is None or np.shape(probe) != (4, 4):
            raise ValueError("weingarten-channel requires a 4x4 probe matrix")
        probe = np.asarray(probe, dtype=np.complex128)
        target = channel_target(probe)
        make = lambda units: _channel_batch(units, probe)
    else:
        raise ValueError(f"unknown moment-check kind {kind!r}")

    acc = _EntryAccumulator(target.shape)
    rng = np.random.default_rng(seed)
    done = 0
    while done < samples:
        m = min(MC_CHUNK, samples - done)
        acc.add(make(sample_su2_batch(rng, m)))
        done += m
    dev = np.abs(acc.mean() - target)
    sigma = acc.std_error()
    # entries with zero empirical variance must match essentially exactly
    ok = np.where(sigma > 0, dev <= 4.0 * sigma, dev <= 1e-12)
    return MomentCheckReport(kind=kind, max_abs_deviation=float(dev.max()),
                             per_entry_sigma=float(sigma.max()), samples=samples,
                             seed=seed, pass_=bool(ok.all()))
