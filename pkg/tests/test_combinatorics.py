import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polygap import combinatorics as cb


def test_binom_outside_triangle_is_zero():
    assert cb.binom(3, 5) == 0
    assert cb.binom(3, -1) == 0
    assert cb.binom(-2, 1) == 0
    assert cb.binom(10, 3) == 120


@pytest.mark.parametrize("m, v, d", [(1, 3, 3), (3, 5, 3), (-1, 5, 3), (0, 2, 0)])
def test_phi_rejects_bad_domain(m, v, d):
    with pytest.raises(ValueError):
        cb.phi(m, v, d)


def test_phi_known_values():
    assert cb.phi(1, 8, 4) == 16
    assert cb.phi(1, 14, 10) == 79
    assert cb.phi(2, 10, 5) == 30
    assert cb.phi(3, 8, 5) == 20


@given(st.integers(1, 300), st.data())
def test_phi_endpoints(d, data):
    assert cb.phi_formula(1, d + 1, d) == cb.binom(d + 1, 2)
    assert cb.phi_formula(1, 2 * d, d) == d * d
    m = data.draw(st.integers(0, d - 1))
    # past 2d+1 the subtracted binomial vanishes
    assert cb.phi(m, 2 * d + 1, d) == cb.phi(m, 5 * d, d)


@given(st.integers(2, 200))
def test_phi_strictly_increasing_up_to_2d(d):
    vals = [cb.phi(1, v, d) for v in range(d + 1, 2 * d + 1)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@given(st.integers(1, 400), st.data())
def test_surplus_form(d, data):
    k = data.draw(st.integers(1, d))
    assert cb.phi_edges_surplus_form(d, k) == cb.phi_formula(1, d + k, d)
    assert (d * (d + k) + (k - 1) * (d - k)) % 2 == 0


@given(st.integers(1, 300), st.data())
def test_telescoping_identity(d, data):
    k = data.draw(st.integers(1, d))
    n = data.draw(st.integers(1, k))
    assert cb.vertex_removal_identity_residual(d, k, n) == 0


@given(st.integers(1, 200), st.data())
def test_pascal_telescope(d, data):
    p = data.draw(st.integers(0, d))
    n = data.draw(st.integers(0, d))
    assert cb.pascal_telescope_residual(d, p, n) == 0


@given(st.integers(1, 300), st.data())
def test_gap_identity(d, data):
    n = data.draw(st.integers(0, d))
    assert cb.gap_identity_residual(d, n) == 0


@given(st.integers(1, 60), st.data())
def test_triplex_fvector_euler(d, data):
    k = data.draw(st.integers(1, d))
    f = cb.triplex_fvector(d, k)
    assert f[0] == d + k
    assert cb.euler_characteristic(f) == 1 - (-1) ** d


@given(st.integers(3, 60))
def test_pentasm_fvector(d):
    f = cb.pentasm_fvector(d)
    assert f[0] == 2 * d + 1
    assert f[1] == d * d + d - 1
    assert f[-1] == d + 3
    assert cb.euler_characteristic(f) == 1 - (-1) ** d


def test_pentasm_fvector_dimension_four():
    assert cb.pentasm_fvector(4) == [9, 19, 17, 7]


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 10))
def test_dplus2_face_counts(r, s, t):
    d = r + s + t
    f = [cb.dplus2_face_count(r, s, t, m) for m in range(d)]
    assert f[0] == (r + 1) * (s + 1) + t
    assert f[-1] == d + 2
    assert cb.euler_characteristic(f) == 1 - (-1) ** d


@given(st.integers(3, 80), st.data())
def test_lemma_identities(d, data):
    m = data.draw(st.integers(2, d))
    assert cb.binomial_excess_2(d, m) == cb.binomial_excess_2_factored(d, m)
    if m >= 3:
        assert cb.binomial_excess_3(d, m) == cb.binomial_excess_3_factored(d, m)


def test_lemma_expressions_vanish_at_m_equal_d():
    for d in range(3, 20):
        assert cb.binomial_excess_2(d, d) == 0
        assert cb.binomial_excess_3(d, d) == 0


@given(st.integers(1, 2000), st.data())
def test_alpha_threshold_matches_exact_form(d, data):
    m = data.draw(st.integers(0, 2 * d))
    # m >= d(sqrt5 - 1)/2  <=>  (2m + d)^2 >= 5 d^2
    assert cb.above_alpha(m, d) == ((2 * m + d) ** 2 >= 5 * d * d)


BETA = 0.5436890126920764


@given(st.integers(1, 500), st.data())
def test_beta_threshold_matches_root(d, data):
    m = data.draw(st.integers(0, 2 * d))
    assert abs(m - BETA * d) > 1e-9
    assert cb.above_beta(m, d) == (m >= BETA * d)


def test_beta_is_root_of_cubic():
    x = ((3 * math.sqrt(33) + 17) ** (1 / 3) - (3 * math.sqrt(33) - 17) ** (1 / 3) - 1) / 3
    assert abs(x - BETA) < 1e-12
    assert abs(x ** 3 + x ** 2 + x - 1) < 1e-12


@pytest.mark.parametrize("m, d, want", [(31, 50, True), (30, 50, False), (62, 100, True), (61, 100, False)])
def test_decimal_threshold(m, d, want):
    assert cb.meets_062(m, d) is want


def test_small_dimension_thresholds():
    assert cb.meets_06_small(3, 5)
    assert not cb.meets_06_small(9, 16)
    assert cb.meets_05_small(9, 17)
    assert not cb.meets_05_small(9, 18)
    assert cb.meets_055(11, 20) and not cb.meets_055(10, 20)


def test_fractions_are_exact():
    assert isinstance(cb.binomial_excess_2_factored(10, 4), Fraction)


@pytest.mark.parametrize("n, want", [(0, False), (1, False), (2, True), (9, False), (17, True), (21, False)])
def test_is_prime(n, want):
    assert cb.is_prime(n) is want
