import math

import pytest

from wre.analytic import (haar_mean_second_moment, wre_bounds,
                          wre_closed_form)
from wre.purities import wre_exact
from wre.qstate import make_named_state

LN_3PI = math.log(3 * math.pi)
LN_4PI = math.log(4 * math.pi)


def test_ghz2_value():
    target = 2 * math.log(2) + math.log(3) + 2 * math.log(math.pi)
    assert abs(wre_closed_form("ghz", 2) - target) < 1e-12


def test_w2_equals_ghz2():
    assert wre_closed_form("w", 2) == pytest.approx(wre_closed_form("ghz", 2),
                                                    abs=1e-14)


def test_pbell2_equals_ghz2():
    assert abs(wre_closed_form("pbell", 2) - wre_closed_form("ghz", 2)) < 1e-12


def test_haar_mean_single_qubit_is_coherent():
    # every single-qubit pure state is coherent, so the Haar mean must
    # coincide with the product-state value ln(3 pi)
    assert abs(wre_closed_form("haar-mean", 1) - LN_3PI) < 1e-12


def test_haar_mean_second_moment_values():
    assert abs(haar_mean_second_moment(1) - 1 / (3 * math.pi)) < 1e-15
    assert abs(haar_mean_second_moment(4) - 2 / (17 * 16 * math.pi**4)) < 1e-18


def test_haar_mean_moment_consistent_with_closed_form():
    for n in range(1, 13):
        assert abs(-math.log(haar_mean_second_moment(n))
                   - wre_closed_form("haar-mean", n)) < 1e-12


def test_haar_mean_moment_matches_subset_sum():
    # independent oracle: sum the Haar-mean purity (2^a + 2^(N-a))/(2^N + 1)
    # over all subsets, divided by (6 pi)^N
    for n in range(1, 10):
        total = sum(math.comb(n, a) * (2**a + 2 ** (n - a)) / (2**n + 1)
                    for a in range(n + 1))
        # empty and full subsets have purity exactly 1, not the generic mean;
        # but the generic formula already evaluates to 1 there
        expected = total / (6 * math.pi) ** n
        assert abs(haar_mean_second_moment(n) - expected) < 1e-12 * expected


def test_bounds_values_and_scaling():
    lo, hi = wre_bounds(1)
    assert lo == pytest.approx(2.243342, abs=1e-6)
    assert hi == pytest.approx(2.531024, abs=1e-6)
    for n in (2, 5, 10):
        lo_n, hi_n = wre_bounds(n)
        assert lo_n == pytest.approx(n * lo, abs=1e-9)
        assert hi_n == pytest.approx(n * hi, abs=1e-9)


def test_all_closed_forms_within_bounds():
    for n in range(1, 41):
        lo, hi = wre_bounds(n)
        for kind in ("ghz", "w", "haar-mean", "product"):
            assert lo - 1e-9 <= wre_closed_form(kind, n) <= hi + 1e-9
        if n % 2 == 0:
            assert lo < wre_closed_form("pbell", n) < hi


def test_ghz10_strictly_inside_bounds():
    lo, hi = wre_bounds(10)
    val = wre_closed_form("ghz", 10)
    assert lo < val < hi


def test_asymptotic_classes():
    # the GHZ per-qubit value peaks at N=3 before decreasing, so monotone
    # descent is asserted from N=3 onward
    ghz_per = [wre_closed_form("ghz", n) / n for n in range(3, 41)]
    w_per = [wre_closed_form("w", n) / n for n in range(2, 41)]
    haar_per = [wre_closed_form("haar-mean", n) / n for n in range(2, 41)]
    assert all(a > b for a, b in zip(ghz_per, ghz_per[1:]))
    assert all(a > b for a, b in zip(w_per, w_per[1:]))
    assert all(a < b for a, b in zip(haar_per, haar_per[1:]))
    assert ghz_per[-1] > LN_3PI and abs(ghz_per[-1] - LN_3PI) < 0.05
    assert haar_per[-1] < LN_4PI and abs(haar_per[-1] - LN_4PI) < 0.05
    for n in (2, 10, 40):
        assert abs(wre_closed_form("pbell", n) / n
                   - math.log(2 * math.sqrt(3) * math.pi)) < 1e-12


def test_pbell_product_rule():
    for n in (2, 6, 12):
        assert abs(wre_closed_form("pbell", n)
                   - (n / 2) * wre_closed_form("ghz", 2)) < 1e-10


def test_closed_forms_match_exact():
    for n in range(2, 9):
        for kind in ("ghz", "w"):
            exact = wre_exact(make_named_state(kind, n)).value
            assert abs(exact - wre_closed_form(kind, n)) < 1e-10
        if n % 2 == 0:
            exact = wre_exact(make_named_state("pbell", n)).value
            assert abs(exact - wre_closed_form("pbell", n)) < 1e-10


def test_invalid_args():
    with pytest.raises(ValueError):
        wre_closed_form("pbell", 3)
    with pytest.raises(ValueError):
        wre_closed_form("ghz", 0)
    with pytest.raises(ValueError):
        wre_closed_form("unknown", 2)
