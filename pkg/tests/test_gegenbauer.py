"""Coefficients, evaluation, trigonometric representations, and zeros."""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from gegentropy import (GegenbauerSpec, eval_trig, gegenbauer_value,
                        pochhammer, standard_coeff, standard_representation,
                        szego_coeffs, szego_representation, zeros)

F = Fraction


def brute_cosine_coeff(lam, n, m):
    """d_m straight from factorial ratios, independent of standard_coeff."""
    def rising(a, k):
        out = 1
        for i in range(k):
            out *= a + i
        return out
    return F(rising(lam, m) * rising(lam, n - m),
             math.factorial(m) * math.factorial(n - m))


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(F(7, 3), 0) == 1

    def test_two_three(self):
        assert pochhammer(2, 3) == 24

    def test_vs_factorial_ratio(self):
        # (4)_1 = 4!/3! appears as the (lam=4, n=1) leading cosine coefficient
        assert pochhammer(4, 1) == F(math.factorial(4), math.factorial(3))
        for a in range(1, 8):
            for k in range(0, 6):
                assert pochhammer(a, k) == F(math.factorial(a + k - 1),
                                             math.factorial(a - 1))

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)


class TestStandardCoeff:
    def test_lambda1_all_ones(self):
        for n in range(0, 9):
            for m in range(n + 1):
                assert standard_coeff(GegenbauerSpec(1, n), m) == 1

    def test_lambda2_n2_m1(self):
        spec = GegenbauerSpec(2, 2)
        assert standard_coeff(spec, 1) == 4
        # Oracle: C_2^(2)(cos t) from the recurrence must equal the cosine sum.
        with mp.workdps(50):
            for t in (mp.mpf("0.3"), mp.mpf("1.1"), mp.mpf("2.7")):
                direct = gegenbauer_value(spec, mp.cos(t))
                series = sum(
                    mp.mpf(standard_coeff(spec, m).numerator)
                    / standard_coeff(spec, m).denominator
                    * mp.cos((2 - 2 * m) * t) for m in range(3))
                assert abs(direct - series) < 1e-40

    def test_symmetry_witness(self):
        spec = GegenbauerSpec(3, 5)
        assert standard_coeff(spec, 1) == standard_coeff(spec, 4)

    def test_symmetry_exhaustive(self):
        for lam in range(0, 7):
            for n in range(0, 21):
                spec = GegenbauerSpec(lam, n)
                for m in range(n + 1):
                    assert standard_coeff(spec, m) == standard_coeff(spec, n - m)

    def test_matches_brute_force(self):
        for lam in range(1, 6):
            for n in range(0, 10):
                spec = GegenbauerSpec(lam, n)
                for m in range(n + 1):
                    assert standard_coeff(spec, m) == brute_cosine_coeff(lam, n, m)

    def test_zero_windows(self):
        spec = GegenbauerSpec(3, 4)
        for m in (-2, -1, 5, 6):
            assert standard_coeff(spec, m) == 0
        with pytest.raises(ValueError):
            standard_coeff(spec, -3)
        with pytest.raises(ValueError):
            standard_coeff(spec, 7)

    def test_chebyshev_limit(self):
        assert standard_coeff(GegenbauerSpec(0, 0), 0) == 1
        spec = GegenbauerSpec(0, 5)
        assert [standard_coeff(spec, m) for m in range(6)] == [
            F(1, 2), 0, 0, 0, 0, F(1, 2)]


class TestSzegoCoeffs:
    def test_alpha0_is_one(self):
        for lam in range(1, 8):
            for n in (0, 1, 5, 12):
                _, alphas = szego_coeffs(GegenbauerSpec(lam, n))
                assert alphas[0] == 1
                assert len(alphas) == lam
                assert all(a != 0 for a in alphas)

    def test_lambda4_n1_prefactor(self):
        c, _ = szego_coeffs(GegenbauerSpec(4, 1))
        assert c == F(7, 8)
        # Ties to the factored leading entropy coefficient: c * d_0 = 7/2.
        assert c * standard_coeff(GegenbauerSpec(4, 1), 0) == F(7, 2)

    def test_lambda1_recovers_chebyshev_u(self):
        for n in range(0, 8):
            c, alphas = szego_coeffs(GegenbauerSpec(1, n))
            assert c == 1 and alphas == [F(1)]

    def test_rejects_chebyshev_t_limit(self):
        with pytest.raises(ValueError):
            szego_coeffs(GegenbauerSpec(0, 3))


class TestEvaluation:
    @given(st.integers(min_value=1, max_value=8),
           st.fractions(min_value=F(-2), max_value=F(2), max_denominator=30))
    def test_degree_one(self, lam, x):
        assert gegenbauer_value(GegenbauerSpec(lam, 1), x) == 2 * lam * x

    def test_u2_at_zero(self):
        assert gegenbauer_value(GegenbauerSpec(1, 2), F(0)) == -1

    def test_recurrence_matches_cosine_series(self):
        # Brute-force oracle: the cosine series with factorial-ratio
        # coefficients, evaluated term by term.
        with mp.workdps(50):
            for lam in range(1, 6):
                for n in range(0, 11):
                    spec = GegenbauerSpec(lam, n)
                    for t in (mp.mpf("0.3"), mp.mpf("1.1"), mp.mpf("2.7")):
                        direct = gegenbauer_value(spec, mp.cos(t))
                        d = [brute_cosine_coeff(lam, n, m) for m in range(n + 1)]
                        series = sum(
                            mp.mpf(dm.numerator) / dm.denominator
                            * mp.cos((n - 2 * m) * t)
                            for m, dm in enumerate(d))
                        scale = max(mp.mpf(1), abs(series))
                        assert abs(direct - series) < 1e-40 * scale

    @settings(max_examples=60)
    @given(st.integers(min_value=0, max_value=5),
           st.integers(min_value=0, max_value=12),
           st.fractions(min_value=F(-3, 2), max_value=F(3, 2), max_denominator=24))
    def test_parity(self, lam, n, x):
        spec = GegenbauerSpec(lam, n)
        sign = -1 if n % 2 else 1
        assert gegenbauer_value(spec, -x) == sign * gegenbauer_value(spec, x)

    def test_chebyshev_t_values(self):
        assert gegenbauer_value(GegenbauerSpec(0, 3), F(1, 2)) == -1
        with mp.workdps(50):
            t = mp.mpf("0.8")
            got = gegenbauer_value(GegenbauerSpec(0, 6), mp.cos(t))
            assert abs(got - mp.cos(6 * t)) < 1e-45


class TestTrigRepresentations:
    def test_standard_u2_at_right_angle(self):
        spec = GegenbauerSpec(1, 2)
        rep = standard_representation(spec)
        with mp.workdps(50):
            got = eval_trig(rep, spec, mp.pi / 2)
            assert abs(got - (-1)) < 1e-45

    def test_chebyshev_t_is_single_cosine(self):
        spec = GegenbauerSpec(0, 3)
        rep = standard_representation(spec)
        with mp.workdps(50):
            for t in (mp.mpf("0.17"), mp.mpf("1.9"), mp.mpf("2.9")):
                assert abs(eval_trig(rep, spec, t) - mp.cos(3 * t)) < 1e-45

    def test_szego_equals_standard_on_grid(self):
        with mp.workdps(50):
            for lam in (1, 2, 4):
                for n in (0, 3, 9):
                    spec = GegenbauerSpec(lam, n)
                    std = standard_representation(spec)
                    sze = szego_representation(spec)
                    # Values below the evaluation noise floor (the grid can
                    # hit exact zeros, e.g. theta = pi/2 for odd n) carry no
                    # relative-deviation information.
                    floor = gegenbauer_value(spec, mp.mpf(1)) * mp.mpf("1e-40")
                    for i in range(1, 60):
                        t = mp.pi * i / 60
                        a = eval_trig(std, spec, t)
                        b = eval_trig(sze, spec, t)
                        scale = max(abs(a), abs(b))
                        if scale > floor:
                            assert abs(a - b) / scale < 1e-14

    def test_szego_singular_at_endpoints(self):
        spec = GegenbauerSpec(2, 3)
        rep = szego_representation(spec)
        with pytest.raises(ValueError):
            eval_trig(rep, spec, 0)

    def test_representation_shapes(self):
        spec = GegenbauerSpec(4, 6)
        std = standard_representation(spec)
        assert len(std.coefficients) == 7 and std.prefactor == 1
        sze = szego_representation(spec)
        assert len(sze.coefficients) == 4 and sze.coefficients[0] == 1

    def test_trig_recurrence_identity(self):
        # 2(lam-1) sin^2 t C_n^(lam) = (2 lam + n - 1) cos t C_{n+1}^(lam-1)
        #                              - (n + 2) C_{n+2}^(lam-1)
        with mp.workdps(50):
            for lam in range(2, 6):
                for n in range(0, 8):
                    spec = GegenbauerSpec(lam, n)
                    lower1 = GegenbauerSpec(lam - 1, n + 1)
                    lower2 = GegenbauerSpec(lam - 1, n + 2)
                    for i in range(1, 24):
                        t = mp.pi * i / 24
                        lhs = (2 * (lam - 1) * mp.sin(t) ** 2
                               * eval_trig(standard_representation(spec), spec, t))
                        rhs = ((2 * lam + n - 1) * mp.cos(t)
                               * eval_trig(standard_representation(lower1), lower1, t)
                               - (n + 2)
                               * eval_trig(standard_representation(lower2), lower2, t))
                        scale = max(mp.mpf(1), abs(lhs), abs(rhs))
                        assert abs(lhs - rhs) / scale < 1e-12


class TestZeros:
    def test_u2(self):
        got = zeros(GegenbauerSpec(1, 2), 50)
        assert len(got) == 2
        assert abs(got[0] + F(1, 2)) < 1e-40 and abs(got[1] - F(1, 2)) < 1e-40

    def test_chebyshev_t4(self):
        got = zeros(GegenbauerSpec(0, 4), 50)
        with mp.workdps(60):
            expected = sorted(mp.cos((2 * k - 1) * mp.pi / 8) for k in range(1, 5))
            assert all(abs(a - b) < 1e-45 for a, b in zip(got, expected))

    def test_lambda3_n5_symmetric_with_zero(self):
        got = zeros(GegenbauerSpec(3, 5), 50)
        assert len(got) == 5
        assert abs(got[2]) < 1e-45
        for i in range(5):
            assert abs(got[i] + got[4 - i]) < 1e-44

    def test_residual_small_and_sign_changes(self):
        with mp.workdps(60):
            for lam in (0, 1, 3, 5):
                for n in (1, 4, 9):
                    spec = GegenbauerSpec(lam, n)
                    got = zeros(spec, 50)
                    assert len(got) == n
                    scale = max(abs(gegenbauer_value(spec, mp.mpf(1))), mp.mpf(1))
                    eps = mp.mpf("1e-30")
                    for z in got:
                        assert abs(gegenbauer_value(spec, z)) < 1e-44 * scale
                        left = gegenbauer_value(spec, z - eps)
                        right = gegenbauer_value(spec, z + eps)
                        assert left * right < 0

    def test_interlacing(self):
        for lam in (0, 1, 2, 4):
            for n in range(2, 9):
                inner = zeros(GegenbauerSpec(lam, n - 1), 50)
                outer = zeros(GegenbauerSpec(lam, n), 50)
                for i in range(n - 1):
                    assert outer[i] < inner[i] < outer[i + 1]
