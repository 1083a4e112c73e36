import math
import warnings

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qudit_goldbach.errors import CapacityError, DomainError
from qudit_goldbach.goldbach import pair_counts
from qudit_goldbach.hardylittlewood import (
    INEQUALITY_SET,
    DegenerateInputWarning,
    ScanReport,
    conjecture1_scan,
    epsilon,
    epsilon_table,
    hl_g_count_estimate,
    hl_g_function,
    hl_R,
    hl_R_primorial,
    log_x_table,
    nicolas_f,
    primorial_records,
    proposition2_scan,
    theorem1_scan,
    theorem2_check,
    u_ratio,
    x_champions,
    x_ratio,
)
from qudit_goldbach.numtheory import C2, EXP_GAMMA, ZETA2, dedekind_psi, default_table

C2_TEXT = "0.66016181584686957392781211001455577843262336028473"


def _mp_R(q):
    r = 2 * mpmath.mpf(C2_TEXT)
    for p in sympy.primefactors(q):
        if p > 2:
            r *= mpmath.mpf(p - 1) / (p - 2)
    return r


# -- R and the pair-count estimate -------------------------------------------


@pytest.mark.parametrize("q, value", [(2, 1.32032), (6, 2.64065), (15, 3.52086)])
def test_hl_R_examples(q, value):
    assert hl_R(q) == pytest.approx(value, abs=1e-5)


@given(st.integers(2, 10**6))
def test_hl_R_against_mpmath(q):
    with mpmath.workdps(30):
        assert hl_R(q) == pytest.approx(float(_mp_R(q)), rel=1e-13)


def test_hl_R_rejects_small():
    with pytest.raises(DomainError):
        hl_R(1)


def test_count_estimate_values():
    assert hl_g_count_estimate(4) == pytest.approx(2 * C2 * 4 / math.log(4) ** 2, rel=1e-15)
    assert hl_g_count_estimate(4) == pytest.approx(2.75, abs=0.005)
    # the estimate tracks ordered pairs, roughly twice the unordered count
    assert hl_g_count_estimate(1000) == pytest.approx(36.893, abs=1e-3)
    counts = pair_counts(10**6)
    ordered = 2 * counts[10**6]
    assert abs(hl_g_count_estimate(10**6) - ordered) / ordered < 0.2


@pytest.mark.parametrize("q", [3, 2, 1001])
def test_count_estimate_domain(q):
    with pytest.raises(DomainError):
        hl_g_count_estimate(q)


# -- epsilon and theorem-1 scan ----------------------------------------------


@pytest.mark.parametrize(
    "q, rounded",
    [(2, 2.15), (3, 1.17), (4, 0.92), (12, 0.38), (30, 0.22), (11, -0.47), (36, -0.27)],
)
def test_epsilon_two_decimals(q, rounded):
    assert round(epsilon(q), 2) == rounded


def test_epsilon_against_mpmath():
    with mpmath.workdps(30):
        for q in range(2, 200):
            psi = q * mpmath.fprod(1 + mpmath.mpf(1) / p for p in sympy.primefactors(q))
            oracle = psi / q - mpmath.exp(mpmath.euler) * mpmath.log(mpmath.log(q))
            assert epsilon(q) == pytest.approx(float(oracle), rel=1e-12, abs=1e-14)


def test_epsilon_small_values():
    assert epsilon(7) == pytest.approx(-0.043, abs=5e-4)
    assert epsilon(24) == pytest.approx(-0.059, abs=5e-4)


def test_epsilon_table_matches_pointwise():
    eps = epsilon_table(3000)
    assert np.isnan(eps[:2]).all()
    for q in range(2, 3001):
        assert eps[q] == pytest.approx(epsilon(q), rel=1e-12, abs=1e-12)


def test_theorem1_small_limits():
    assert theorem1_scan(30).satisfied_set == INEQUALITY_SET
    assert 24 not in theorem1_scan(24).satisfied_set


def test_theorem1_scan_to_10_6():
    rep = theorem1_scan(10**6)
    assert rep.satisfied_set == INEQUALITY_SET
    assert rep.ok
    assert rep.checked == 10**6 - 1
    assert not set(rep.satisfied_set) & set(rep.violations)


def test_scan_report_ok_flag():
    assert ScanReport(10).ok
    assert not ScanReport(10, violations=(3,)).ok


# -- x ratio and proposition 2 -----------------------------------------------


def test_x_ratio_examples():
    assert x_ratio(2) == pytest.approx(0.535107, abs=1e-6)
    assert x_ratio(6) == pytest.approx(0.802661, abs=1e-6)
    assert x_ratio(6) < x_ratio(30) < 1


def test_x_ratio_rejects_odd():
    with pytest.raises(DomainError):
        x_ratio(9)


def test_log_x_table_matches_pointwise():
    logx = log_x_table(5000)
    for q in range(2, 5001, 2):
        assert math.exp(logx[q]) == pytest.approx(x_ratio(q), rel=1e-12)
    assert np.isnan(logx[1::2]).all()


def test_proposition2_scan():
    rep = proposition2_scan(10**6)
    assert rep.ok
    assert rep.checked == 500_000


def test_x_champions():
    assert x_champions(30030) == [2, 6, 30, 210, 2310, 30030]
    assert x_champions(2) == [2]
    assert x_champions(210) == [2, 6, 30, 210]


# -- primorials --------------------------------------------------------------


def test_hl_R_primorial_small():
    assert hl_R_primorial(1) == pytest.approx(math.log(2 * C2), rel=1e-15)
    assert hl_R_primorial(2) == pytest.approx(math.log(hl_R(6)), abs=1e-12)


def test_hl_R_primorial_matches_direct_product():
    table = default_table()
    for r in range(1, 10):
        n_r = math.prod(table.primes[:r].tolist())
        assert math.exp(hl_R_primorial(r)) == pytest.approx(hl_R(n_r), rel=1e-10)


def test_hl_R_primorial_large_stays_finite():
    value = hl_R_primorial(100_000)
    assert math.isfinite(value)
    primes = default_table().primes[1:100_000].tolist()
    with mpmath.workdps(30):
        oracle = mpmath.log(2 * mpmath.mpf(C2_TEXT)) + mpmath.fsum(
            mpmath.log(mpmath.mpf(p - 1) / (p - 2)) for p in primes
        )
    assert value == pytest.approx(float(oracle), abs=1e-12)


def test_u_ratio_examples():
    assert u_ratio(2).u_minus_eg == pytest.approx(2.7468, abs=1e-4)
    assert u_ratio(10).u_minus_eg == pytest.approx(0.23458, abs=1e-5)
    assert u_ratio(10_000).u_minus_eg == pytest.approx(0.0010, abs=5e-5)
    with pytest.raises(DomainError):
        u_ratio(1)


def test_records_stream_matches_direct():
    stream = {rec.r: rec for rec in primorial_records(1000)}
    for r in (2, 3, 10, 999, 1000):
        direct = u_ratio(r)
        assert stream[r].u == pytest.approx(direct.u, rel=1e-13)
        assert stream[r].log_N == pytest.approx(direct.log_N, rel=1e-13)
        assert stream[r].u_minus_eg == stream[r].u - EXP_GAMMA


def test_u_minus_eg_positive_and_decreasing():
    values = [u_ratio(r).u_minus_eg for r in (2, 10, 100, 1000, 10_000, 100_000)]
    assert all(v > 0 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


def test_conjecture1_scan():
    for max_r in (2, 3, 100_000):
        assert conjecture1_scan(max_r).ok


def test_primorial_capacity():
    with pytest.raises(CapacityError):
        list(primorial_records(200_000))


@pytest.mark.parametrize("r", [3, 10, 10_000])
def test_theorem2_check(r):
    assert theorem2_check(r)


def test_theorem2_direct_at_30():
    lhs = dedekind_psi(30) / (30 * math.log(math.log(30)))
    assert lhs > EXP_GAMMA / ZETA2
    with pytest.raises(DomainError):
        theorem2_check(2)


# -- f and g -----------------------------------------------------------------


def test_nicolas_f_values():
    assert nicolas_f(3) == pytest.approx(0.346239, abs=1e-6)
    assert nicolas_f(97) < 1
    assert nicolas_f(97) < nicolas_f(10**6) < 1


def test_nicolas_f_flags_degenerate_input():
    with pytest.warns(DegenerateInputWarning):
        value = nicolas_f(2)
    assert value < 0
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        nicolas_f(3)


def test_hl_g_function_values():
    assert hl_g_function(3) == pytest.approx(0.393357, abs=1e-6)
    assert hl_g_function(97) < 1
    with pytest.raises(DomainError):
        hl_g_function(2.5)


def test_g_times_u_is_exp_gamma():
    table = default_table()
    for rec in primorial_records(1000):
        g = hl_g_function(table.nth(rec.r))
        assert g * rec.u == pytest.approx(EXP_GAMMA, rel=1e-9)
