"""End-to-end acceptance criteria, one test per criterion.

Sampling criteria use a 4-sigma rule at the stated sample counts; exact
identities use fixed tolerances. Each test prints a one-line verdict.
"""

import csv
import math

import numpy as np

from wre import analytic, husimi, protocol, purities, twirl
from wre.cli import main
from wre.qstate import (DensityMatrix, apply_local_unitaries,
                        make_named_state, sample_haar_state)

LN_3PI = math.log(3 * math.pi)
LN_4PI = math.log(4 * math.pi)
GHZ2_VALUE = 2 * math.log(2) + math.log(3) + 2 * math.log(math.pi)


def _report(num, label, passed):
    print(f"[acceptance] criterion {num} ({label}): {'PASS' if passed else 'FAIL'}")
    assert passed


def test_criterion_1_central_identity():
    rng = np.random.default_rng(1001)
    ok = True
    for n in range(2, 11):
        lo, hi = analytic.wre_bounds(n)
        for _ in range(100):
            psi = sample_haar_state(n, rng)
            enum = purities.purity_sum_enum(psi).sum
            swap = purities.purity_sum_swap(psi).sum
            ok &= abs(swap - enum) / enum <= 1e-12
            value = n * math.log(6 * math.pi) - math.log(swap)
            ok &= lo - 1e-10 <= value <= hi + 1e-10
    _report(1, "swap contraction equals subset enumeration, value in bounds", ok)


def test_criterion_2_closed_forms():
    ok = True
    for n in range(2, 13):
        for kind in ("ghz", "w"):
            exact = purities.wre_exact(make_named_state(kind, n)).value
            ok &= abs(exact - analytic.wre_closed_form(kind, n)) <= 1e-10
        if n % 2 == 0:
            exact = purities.wre_exact(make_named_state("pbell", n)).value
            ok &= abs(exact - analytic.wre_closed_form("pbell", n)) <= 1e-10
    for kind in ("ghz", "w", "pbell"):
        ok &= abs(analytic.wre_closed_form(kind, 2) - GHZ2_VALUE) <= 1e-12
    _report(2, "exact matches closed forms", ok)


def test_criterion_3_husimi_mc():
    state = make_named_state("ghz", 4)
    est = husimi.wre_mc(state, 1_000_000, seed=1003)
    target = analytic.wre_closed_form("ghz", 4)
    ok = abs(est.value - target) <= 4 * est.std_error_value
    norm = husimi.mc_normalization_check(state, 1_000_000, seed=1004)
    ok &= abs(norm.mean - 1.0) <= 4 * norm.std_error
    _report(3, "Husimi MC matches closed form, normalization holds", ok)


def test_criterion_4_twirl_equivalence():
    state = make_named_state("w", 3)
    tw = twirl.wre_twirl(state, 1_000_000, seed=1005)
    mc = husimi.wre_mc(state, 1_000_000, seed=1006)
    combined = math.hypot(tw.std_error_value, mc.std_error_value)
    ok = abs(tw.value - mc.value) <= 4 * combined
    single = twirl.wre_twirl(make_named_state("product", 1), 1_000_000, seed=1007)
    ok &= abs(single.value - LN_3PI) <= 4 * single.std_error_value
    _report(4, "twirl equals Husimi MC and single-qubit closed form", ok)


def test_criterion_5_haar_calculus():
    ok = twirl.haar_moment_check("two-point", 1_000_000, seed=1008).pass_
    ok &= twirl.haar_moment_check("four-point-state", 1_000_000, seed=1009).pass_
    rng = np.random.default_rng(1010)
    for k in range(10):
        probe = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        ok &= twirl.haar_moment_check("weingarten-channel", 1_000_000,
                                      seed=1011 + k, probe=probe).pass_
    _report(5, "two-point, four-point, and Weingarten channel checks", ok)


def test_criterion_6_haar_averaged_moment():
    rng = np.random.default_rng(1021)
    n = 4
    moments = np.array([
        purities.purity_sum_swap(sample_haar_state(n, rng)).sum
        / (6 * math.pi) ** n
        for _ in range(1000)
    ])
    target = analytic.haar_mean_second_moment(n)
    boot_rng = np.random.default_rng(1022)
    boot_means = np.array([
        moments[boot_rng.integers(0, moments.size, moments.size)].mean()
        for _ in range(2000)
    ])
    sigma = boot_means.std(ddof=1)
    ok = abs(moments.mean() - target) <= 4 * sigma
    _report(6, "Haar-averaged second moment", ok)


def test_criterion_7_protocol():
    singlet = np.array([0, -1, 1, 0], dtype=complex) / math.sqrt(2)
    out = protocol.pair_gate() @ singlet
    ok = abs(abs(out[2]) - 1.0) <= 1e-12

    shots = 100_000
    summary = protocol.sample_shots(make_named_state("ghz", 2), shots, seed=1023)
    sigma = math.sqrt(0.1875 / shots)
    ok &= abs(summary.mean_o - 0.75) <= 4 * sigma
    sigma_var = 0.5 * sigma  # |1 - 2p| sigma by the delta method
    ok &= abs(summary.sample_variance - 0.1875) <= 4 * sigma_var

    rng = np.random.default_rng(1024)
    for n in range(2, 11):
        for psi in (make_named_state("ghz", n), sample_haar_state(n, rng)):
            expected = purities.purity_sum_swap(psi).sum / 2**n
            ok &= abs(protocol.exact_success_probability(psi) - expected) <= 1e-10
    _report(7, "singlet mapping, shot statistics, success-probability identity", ok)


def test_criterion_8_lu_invariance():
    rng = np.random.default_rng(1025)
    state = make_named_state("ghz", 6)
    base = purities.wre_exact(state).value
    ok = True
    for _ in range(20):
        units = [twirl.sample_su2(rng) for _ in range(6)]
        dressed = apply_local_unitaries(state, units)
        ok &= abs(purities.wre_exact(dressed).value - base) < 1e-10
    _report(8, "local-unitary invariance of the exact WRE", ok)


def _random_rank2_dm(n, rng):
    z = rng.standard_normal((2**n, 2)) + 1j * rng.standard_normal((2**n, 2))
    q = np.linalg.qr(z)[0]
    w = rng.random()
    weights = np.array([w, 1 - w])
    entries = (q * weights) @ q.conj().T
    return DensityMatrix(n, entries)


def test_criterion_9_mixed_state_identity():
    rng = np.random.default_rng(1026)
    ok = True
    for n in (2, 3, 4):
        for _ in range(20):
            rho = _random_rank2_dm(n, rng)
            exact = -math.log(purities.purity_sum_dm(rho).sum / (6 * math.pi) ** n)
            est = husimi.wre_mc(rho, 100_000, seed=int(rng.integers(2**32)))
            ok &= abs(est.value - exact) <= 4 * est.std_error_value
    _report(9, "mixed-state identity via density-matrix enumeration vs MC", ok)


def test_criterion_10_sweep_reproduction(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--states", "ghz,w,pbell,haar-mean",
                 "--n", "2:12", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    per = {}
    for row in rows:
        per.setdefault(row["state"], []).append(
            (int(row["n"]), float(row["wre_per_qubit"])))
    for vals in per.values():
        vals.sort()

    ghz = [v for _, v in per["ghz"]]
    w = [v for _, v in per["w"]]
    haar = [v for _, v in per["haar-mean"]]
    pbell = [v for _, v in per["pbell"]]

    # GHZ per-qubit peaks at N=3 (closed-form fact), then decreases
    ok = all(a > b for a, b in zip(ghz[1:], ghz[2:]))
    ok &= all(a > b for a, b in zip(w, w[1:]))
    ok &= all(a < b for a, b in zip(haar, haar[1:]))
    ok &= all(abs(v - math.log(2 * math.sqrt(3) * math.pi)) < 1e-12 for v in pbell)
    # endpoint gaps: decreasing families end closer to the lower bound than
    # they start, haar ends closer to the upper bound
    ok &= (ghz[-1] - LN_3PI) < 0.5 * (ghz[0] - LN_3PI)
    ok &= (w[-1] - LN_3PI) < 0.5 * (w[0] - LN_3PI)
    ok &= (LN_4PI - haar[-1]) < 0.5 * (LN_4PI - haar[0])
    ok &= all(LN_3PI < v < LN_4PI for v in ghz + w + haar + pbell)
    _report(10, "sweep reproduces the three asymptotic classes", ok)
