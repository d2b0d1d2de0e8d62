"""Cross-method verification suite behind the `wre verify` CLI command.

Each check returns (name, passed, detail); exact identities use fixed
tolerances, sampling checks use a 4-sigma rule.
"""

import math

import numpy as np

from . import analytic, husimi, protocol, purities, twirl
from .qstate import apply_local_unitaries, make_named_state, sample_haar_state

_QUICK = {
    "oracle_n": range(2, 7), "oracle_states": 10,
    "closed_n": range(2, 9),
    "lu_n": 4, "lu_trials": 5,
    "moment_samples": 100_000,
    "mc_samples": 100_000,
    "proto_n": range(2, 7),
    "shots": 20_000,
    "matrix_n": (2, 4),
}

_FULL = {
    "oracle_n": range(2, 11), "oracle_states": 25,
    "closed_n": range(2, 13),
    "lu_n": 6, "lu_trials": 20,
    "moment_samples": 1_000_000,
    "mc_samples": 1_000_000,
    "proto_n": range(2, 11),
    "shots": 100_000,
    "matrix_n": (2, 4, 6),
}


def _check_oracle_equivalence(cfg, rng):
    worst = 0.0
    for n in cfg["oracle_n"]:
        for _ in range(cfg["oracle_states"]):
            psi = sample_haar_state(n, rng)
            enum = purities.purity_sum_enum(psi).sum
            swap = purities.purity_sum_swap(psi).sum
            worst = max(worst, abs(swap - enum) / enum)
    return worst <= 1e-12, f"max relative deviation {worst:.2e} (tol 1e-12)"


def _check_bounds(cfg, rng):
    worst = 0.0
    for n in cfg["oracle_n"]:
        lo, hi = analytic.wre_bounds(n)
        for kind in ("ghz", "w", "product"):
            val = purities.wre_exact(make_named_state(kind, n)).value
            worst = max(worst, lo - val, val - hi)
        val = purities.wre_exact(sample_haar_state(n, rng)).value
        worst = max(worst, lo - val, val - hi)
    return worst <= 1e-10, f"max bound violation {worst:.2e} (tol 1e-10)"


def _check_closed_forms(cfg, rng):
    worst = 0.0
    for n in cfg["closed_n"]:
        kinds = ["ghz", "w"] + (["pbell"] if n % 2 == 0 else [])
        for kind in kinds:
            exact = purities.wre_exact(make_named_state(kind, n)).value
            worst = max(worst, abs(exact - analytic.wre_closed_form(kind, n)))
    return worst <= 1e-10, f"max |exact - closed form| {worst:.2e} (tol 1e-10)"


def _check_lu_invariance(cfg, rng):
    n = cfg["lu_n"]
    base = purities.wre_exact(make_named_state("ghz", n)).value
    worst = 0.0
    for _ in range(cfg["lu_trials"]):
        units = [twirl.sample_su2(rng) for _ in range(n)]
        dressed = apply_local_unitaries(make_named_state("ghz", n), units)
        worst = max(worst, abs(purities.wre_exact(dressed).value - base))
    return worst <= 1e-10, f"max WRE change under local unitaries {worst:.2e} (tol 1e-10)"


def _check_haar_moments(cfg, rng):
    samples = cfg["moment_samples"]
    seeds = rng.integers(2**32, size=3)
    reports = [
        twirl.haar_moment_check("two-point", samples, int(seeds[0])),
        twirl.haar_moment_check("four-point-state", samples, int(seeds[1])),
        twirl.haar_moment_check(
            "weingarten-channel", samples, int(seeds[2]),
            probe=rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))),
    ]
    ok = all(r.pass_ for r in reports)
    detail = "; ".join(f"{r.kind}: max dev {r.max_abs_deviation:.2e}" for r in reports)
    return ok, detail


def _check_normalization(cfg, rng):
    est = husimi.mc_normalization_check(make_named_state("ghz", 3),
                                        cfg["mc_samples"], int(rng.integers(2**32)))
    dev = abs(est.mean - 1.0)
    return dev <= 4 * est.std_error, f"|norm - 1| = {dev:.2e}, 4 sigma = {4 * est.std_error:.2e}"


def _check_mc_agreement(cfg, rng):
    state = make_named_state("ghz", 3)
    mc = husimi.wre_mc(state, cfg["mc_samples"], int(rng.integers(2**32)))
    exact = purities.wre_exact(state).value
    dev = abs(mc.value - exact)
    return dev <= 4 * mc.std_error_value, \
        f"|mc - exact| = {dev:.2e}, 4 sigma = {4 * mc.std_error_value:.2e}"


def _check_twirl_agreement(cfg, rng):
    state = make_named_state("w", 3)
    tw = twirl.wre_twirl(state, cfg["mc_samples"], int(rng.integers(2**32)))
    exact = purities.wre_exact(state).value
    dev = abs(tw.value - exact)
    return dev <= 4 * tw.std_error_value, \
        f"|twirl - exact| = {dev:.2e}, 4 sigma = {4 * tw.std_error_value:.2e}"


def _check_singlet_mapping(cfg, rng):
    singlet = np.array([0, -1, 1, 0], dtype=np.complex128) / math.sqrt(2.0)
    out = protocol.pair_gate() @ singlet
    # flag state |down up> has interleaved pair index 0b10
    dev = abs(abs(out[protocol._SINGLET_FLAG]) - 1.0)
    return dev <= 1e-12, f"| |<down up|G|singlet>| - 1 | = {dev:.2e} (tol 1e-12)"


def _check_protocol_identity(cfg, rng):
    worst = 0.0
    for n in cfg["proto_n"]:
        for psi in (make_named_state("ghz", n), sample_haar_state(n, rng)):
            p = protocol.exact_success_probability(psi)
            expected = purities.purity_sum_swap(psi).sum / 2**n
            worst = max(worst, abs(p - expected))
    return worst <= 1e-10, f"max |p - purity sum / 2^N| {worst:.2e} (tol 1e-10)"


def _check_protocol_shots(cfg, rng):
    shots = cfg["shots"]
    summary = protocol.sample_shots(make_named_state("ghz", 2), shots,
                                    int(rng.integers(2**32)))
    sigma = math.sqrt(0.1875 / shots)
    dev = abs(summary.mean_o - 0.75)
    return dev <= 4 * sigma, f"|mean_o - 0.75| = {dev:.2e}, 4 sigma = {4 * sigma:.2e}"


def _check_method_matrix(cfg, rng):
    failures = []
    for n in cfg["matrix_n"]:
        for kind in ("ghz", "w", "pbell"):
            state = make_named_state(kind, n)
            exact = purities.wre_exact(state).value
            closed = analytic.wre_closed_form(kind, n)
            if abs(exact - closed) > 1e-10:
                failures.append(f"{kind}({n}) exact vs analytic")
            mc = husimi.wre_mc(state, cfg["mc_samples"], int(rng.integers(2**32)))
            if abs(mc.value - exact) > 4 * mc.std_error_value:
                failures.append(f"{kind}({n}) mc vs exact")
            est = protocol.wre_protocol(state, cfg["shots"], int(rng.integers(2**32)))
            if abs(est.wre.value - exact) > 4 * est.wre.std_error_value:
                failures.append(f"{kind}({n}) protocol vs exact")
    return not failures, "all method pairs agree" if not failures else "; ".join(failures)


CHECKS = [
    ("oracle-equivalence", _check_oracle_equivalence),
    ("wre-bounds", _check_bounds),
    ("closed-forms", _check_closed_forms),
    ("lu-invariance", _check_lu_invariance),
    ("haar-moments", _check_haar_moments),
    ("husimi-normalization", _check_normalization),
    ("mc-exact-agreement", _check_mc_agreement),
    ("twirl-exact-agreement", _check_twirl_agreement),
    ("singlet-mapping", _check_singlet_mapping),
    ("protocol-identity", _check_protocol_identity),
    ("protocol-shots", _check_protocol_shots),
    ("method-matrix", _check_method_matrix),
]


def run_checks(level="quick", seed=0):
    """Run the verification suite; yields (name, passed, detail) tuples."""
    cfg = _FULL if level == "full" else _QUICK
    rng = np.random.default_rng(seed)
    results = []
    for name, fn in CHECKS:
        passed, detail = fn(cfg, rng)
        results.append((name, passed, detail))
    return results
