# -*- coding: utf-8 -*-
"""
제타 함수 핵심 테스트

테스트 범위:
1. N_1..N_{2g}로부터 P(t) 적합과 오류
2. 함수방정식 (계수 대칭, 수치), 리만 가설
3. 유수, 유수 기호 교차 검사, Riemann–Roch 꼬리
4. 주부분 분해, Tate–Iwasawa 절단 분해
"""
from fractions import Fraction

import pytest

from src.domain.entities.zeta_data import ZetaData
from src.domain.exceptions import CountsInconsistent, InvalidArgument, PoleError
from src.domain.services.explicit_formula_service import ExplicitFormulaService
from src.domain.services.spectrum_service import SpectrumService
from src.domain.services.zeta_service import ZetaService, newton_power_sums


class TestFitNumerator:
    """fit_numerator 테스트"""

    def test_supersingular_elliptic_over_f2(self):
        """N_1 = 3, N_2 = 9 → P = 1 + 2t²"""
        # When
        zeta = ZetaService.fit_numerator(2, 1, {1: 3, 2: 9})

        # Then
        assert zeta.coefficients == (1, 0, 2)
        assert zeta.class_number == 3

    @pytest.mark.parametrize("name,expected_P,expected_h", [
        ("p1_f2", (1,), 1),
        ("p1_f3", (1,), 1),
        ("elliptic_f2", (1, 0, 2), 3),
        ("elliptic_f3", (1, 3, 3), 7),
    ])
    def test_example_curves(self, zetas, name, expected_P, expected_h):
        assert zetas[name].coefficients == expected_P
        assert zetas[name].class_number == expected_h

    def test_fit_predicts_remaining_counts(self, curves, curve_counts, zetas):
        """적합에 쓰지 않은 N_m (m > 2g)을 정확히 예측"""
        for name, curve in curves.items():
            _, extra = SpectrumService.split_counts(curve_counts[name], 2 * curve.genus)
            check = ExplicitFormulaService.lefschetz_check(zetas[name], extra)
            assert check["ok"], name

    def test_missing_counts_raise(self):
        with pytest.raises(InvalidArgument):
            ZetaService.fit_numerator(2, 1, {1: 3})

    def test_non_integral_numerator_raises(self):
        """N_1 = 3, N_2 = 8 이면 t² 계수가 정수가 아님"""
        with pytest.raises(CountsInconsistent):
            ZetaService.fit_numerator(2, 1, {1: 3, 2: 8})


class TestZetaData:
    """ZetaData 불변식 테스트"""

    def test_wrong_length_raises(self):
        with pytest.raises(ValueError):
            ZetaData(2, 1, (1, 0))

    def test_constant_term_must_be_one(self):
        with pytest.raises(ValueError):
            ZetaData(2, 1, (2, 0, 2))

    def test_invalid_data_is_input_error(self):
        """잘못된 ZetaData는 종료 코드 2의 InvalidArgument"""
        with pytest.raises(InvalidArgument) as exc_info:
            ZetaData(1, 0, (1,))
        assert exc_info.value.exit_code == 2

    def test_newton_power_sums(self):
        """P = 1 + 2t² 의 역근 ±i√2: s_1 = 0, s_2 = -4"""
        assert newton_power_sums([1, 0, 2], 2) == [2, 0, -4]


class TestFunctionalEquation:
    """함수방정식 / 리만 가설 테스트"""

    def test_symmetry_and_riemann_hypothesis(self, zetas):
        for name, zeta in zetas.items():
            report = ZetaService.functional_equation_check(zeta)
            assert report["symmetric"], name
            assert report["riemann_hypothesis"], name
            assert len(report["root_moduli"]) == 2 * zeta.g

    def test_asymmetric_numerator_detected(self):
        """a_2 ≠ q·a_0 이면 대칭 실패"""
        # Given
        zeta = ZetaData(2, 1, (1, 1, 1))

        # When
        report = ZetaService.functional_equation_check(zeta)

        # Then
        assert not report["symmetric"]

    @pytest.mark.parametrize("s", [0.3 + 2j, 2.5, -0.7 + 1.1j])
    def test_numeric_functional_equation(self, zetas, s):
        """ζ_C(s) = q^{g-1} q^{-s(2g-2)} ζ_C(1-s)"""
        for name, zeta in zetas.items():
            assert ZetaService.functional_equation_numeric(zeta, s)["ok"], name

    def test_pole_at_zero(self, zetas):
        """s = 0 에서 q^{-s} = 1"""
        with pytest.raises(PoleError):
            ZetaService.zeta_value(zetas["elliptic_f2"], 0)


class TestResiduesAndSeries:
    """유수 / 급수 테스트"""

    def test_projective_line_residues(self, zetas):
        """ℙ¹/𝔽_3: res_{s=0} = -1/2, res_{s=1} = 3/2 (단위 1/ln q)"""
        # When
        h, res0, res1 = ZetaService.class_number_and_residues(zetas["p1_f3"])

        # Then
        assert h == 1
        assert res0.coeff == Fraction(-1, 2)
        assert res1.coeff == Fraction(3, 2)

    def test_elliptic_residues(self, zetas):
        """g = 1 이면 두 유수의 크기가 h/(q-1)"""
        # When
        h, res0, res1 = ZetaService.class_number_and_residues(zetas["elliptic_f3"])

        # Then
        assert res0.coeff == Fraction(-7, 2)
        assert res1.coeff == Fraction(7, 2)

    def test_laurent_crosscheck(self, zetas):
        for name, zeta in zetas.items():
            assert ZetaService.laurent_residue_crosscheck(zeta)["ok"], name

    def test_projective_line_series(self):
        assert ZetaService.series_coefficients(ZetaData(2, 0, (1,)), 3) == [1, 3, 7, 15]

    def test_riemann_roch_tail(self, zetas):
        """n ≥ 2g-1 에서 b_n = h(q^{n+1-g} - 1)/(q-1)"""
        for name, zeta in zetas.items():
            series = ZetaService.series_coefficients(zeta, 10)
            for n in range(max(2 * zeta.g - 1, 0), 11):
                assert series[n] == ZetaService.riemann_roch_tail(zeta, n), (name, n)

    def test_predict_count(self):
        assert ZetaService.predict_count(ZetaData(2, 1, (1, 0, 2)), 2) == 9


class TestDecompositions:
    """주부분 / Tate–Iwasawa 분해 테스트"""

    def test_principal_parts(self, zetas):
        for name, zeta in zetas.items():
            report = ZetaService.principal_parts_check(zeta)
            assert report["ok"], name
            assert report["remainder_zero"], name

    def test_principal_parts_of_projective_line_vanish(self, zetas):
        """g = 0 이면 E(t) = 0"""
        assert ZetaService.principal_parts_check(zetas["p1_f2"])["entire_part"] == [0]

    @pytest.mark.parametrize("offset", [0, 5, 10])
    def test_tate_iwasawa(self, zetas, offset):
        for name, zeta in zetas.items():
            assert ZetaService.tate_iwasawa_decomposition(zeta, 2 * zeta.g + offset)["ok"], name

    def test_tate_iwasawa_truncation_too_small(self, zetas):
        with pytest.raises(InvalidArgument):
            ZetaService.tate_iwasawa_decomposition(zetas["elliptic_f2"], 1)
