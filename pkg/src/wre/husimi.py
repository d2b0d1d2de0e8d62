"""Spin coherent states, Husimi function, and Monte Carlo WRE estimation.

The Husimi function of an N-qubit state is P_H(rho, n) = <n|rho|n> / (2 pi)^N
over product coherent configurations n; the WRE is -ln of the integral of
P_H^2 over all configurations. The MC estimators below integrate with
uniform sphere sampling, weight (4 pi)^N per qubit.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EstimatorError
from .qstate import PureState

# Fixed accumulation chunk; part of the reproducibility contract together
# with (seed, workers).
MC_CHUNK = 1 << 15


@dataclass(frozen=True)
class BlochDirection:
    """Point on the unit sphere in polar coordinates."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError("theta must lie in [0, pi]")
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ValueError("phi must lie in [0, 2 pi)")


@dataclass(frozen=True)
class CoherentConfig:
    """One Bloch direction per qubit."""

    directions: tuple

    def __len__(self):
        return len(self.directions)


@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.std_error < 0:
            raise ValueError("std_error must be >= 0")


EXACT_METHODS = frozenset({"exact-swap", "subset-enum", "analytic"})
METHOD_TAGS = frozenset({"exact-swap", "subset-enum", "mc-husimi", "twirl",
                         "protocol", "analytic"})


@dataclass(frozen=True)
class WreEstimate:
    """A WRE value in nats plus its provenance."""

    value: float
    second_moment: float
    std_error_value: float
    method: str
    samples: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.method not in METHOD_TAGS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.second_moment <= 0:
            raise ValueError("second_moment must be positive")
        if abs(self.value + math.log(self.second_moment)) > 1e-12:
            raise ValueError("value must equal -ln(second_moment)")
        if self.method in EXACT_METHODS and self.std_error_value != 0.0:
            raise ValueError("exact methods carry zero statistical error")


def coherent_amplitudes(direction):
    """Ket components (cos(theta/2), e^{i phi} sin(theta/2)) of |n>."""
    half = direction.theta / 2.0
    return np.array([math.cos(half),
                     np.exp(1j * direction.phi) * math.sin(half)],
                    dtype=np.complex128)


def _config_spinors(config):
    return np.stack([coherent_amplitudes(d) for d in config.directions])


def coherent_overlap(state, config):
    """<n|psi> by sequential single-qubit contraction, O(2^N)."""
    if len(config) != state.n_qubits:
        raise ValueError("config length must match qubit count")
    spin = _config_spinors(config)[np.newaxis]
    return complex(kernels.overlap_batch(state.amplitudes, spin)[0])


def _prob_batch(state, spinors):
    """<n|rho|n> for a batch of coherent configurations."""
    if isinstance(state, PureState):
        ov = kernels.overlap_batch(state.amplitudes, spinors)
        return np.abs(ov) ** 2
    # density matrix: build the product kets batch-wise
    n_samp = spinors.shape[0]
    vecs = np.ones((n_samp, 1), dtype=np.complex128)
    for j in range(state.n_qubits):
        vecs = (spinors[:, j, :, np.newaxis] * vecs[:, np.newaxis, :]).reshape(n_samp, -1)
    return np.einsum("si,ij,sj->s", vecs.conj(), state.entries, vecs,
                     optimize=True).real


def husimi_value(state, config):
    """P_H(state, n) = <n|rho|n> / (2 pi)^N; nonnegative real."""
    if len(config) != state.n_qubits:
        raise ValueError("config length must match qubit count")
    spin = _config_spinors(config)[np.newaxis]
    p = float(_prob_batch(state, spin)[0])
    return max(p, 0.0) / (2.0 * math.pi) ** state.n_qubits


def sample_direction(rng):
    """One direction uniform on the sphere (inverse CDF in cos theta)."""
    cos_theta = 1.0 - 2.0 * rng.random()
    return BlochDirection(theta=math.acos(cos_theta), phi=2.0 * math.pi * rng.random())


def sample_spinors(rng, size, n_qubits):
    """(size, n_qubits, 2) coherent ket components, uniform on the sphere."""
    u = rng.random((size, n_qubits))
    v = rng.random((size, n_qubits))
    cos_theta = 1.0 - 2.0 * u
    out = np.empty((size, n_qubits, 2), dtype=np.complex128)
    out[:, :, 0] = np.sqrt((1.0 + cos_theta) / 2.0)
    out[:, :, 1] = np.exp(2j * math.pi * v) * np.sqrt((1.0 - cos_theta) / 2.0)
    return out


def _worker_rngs(seed, workers):
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(workers)]


def _worker_shares(samples, workers):
    base, extra = divmod(samples, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _mc_integrate(state, samples, seed, power, workers=1):
    """MC estimate of the integral of P_H^power over all configurations.

    Deterministic for fixed (seed, workers): each worker gets an
    independent substream and a fixed chunk size.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    n = state.n_qubits
    weight = (4.0 * math.pi) ** n
    norm = (2.0 * math.pi) ** n
    total = 0.0
    total_sq = 0.0
    for rng, share in zip(_worker_rngs(seed, workers), _worker_shares(samples, workers)):
        done = 0
        while done < share:
            m = min(MC_CHUNK, share - done)
            spinors = sample_spinors(rng, m, n)
            p_h = _prob_batch(state, spinors) / norm
            if not np.all(np.isfinite(p_h)):
                raise EstimatorError("non-finite Husimi values encountered")
            w = weight * p_h**power
            total += float(w.sum())
            total_sq += float((w * w).sum())
            done += m
    mean = total / samples
    var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    return MomentEstimate(mean=mean, std_error=math.sqrt(var / samples),
                          samples=samples, seed=seed)


def mc_second_moment(state, samples, seed, workers=1):
    """Estimate of the second moment M = integral of P_H^2."""
    return _mc_integrate(state, samples, seed, power=2, workers=workers)


def mc_normalization_check(state, samples, seed, workers=1):
    """Estimate of the integral of P_H; should be 1 for any valid state."""
    return _mc_integrate(state, samples, seed, power=1, workers=workers)


def wre_from_moment(est, method):
    """-ln of a positive moment estimate, delta-method error propagation."""
    if est.mean <= 0.0:
        raise EstimatorError(
            f"moment estimate {est.mean!r} is not positive; increase samples")
    return WreEstimate(value=-math.log(est.mean), second_moment=est.mean,
                       std_error_value=est.std_error / est.mean, method=method,
                       samples=est.samples, seed=est.seed)


def wre_mc(state, samples, seed, workers=1):
    """WRE via Monte Carlo integration of the squared Husimi function."""
    return wre_from_moment(mc_second_moment(state, samples, seed, workers),
                           method="mc-husimi")
