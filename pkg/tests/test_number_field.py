# -*- coding: utf-8 -*-
"""
허수 이차체 / 아르키메데스 검사 테스트

테스트 범위:
1. 기본 판별식 판정, 크로네커 기호
2. 축소 형식 유수, 아이디얼 개수의 두 계산 경로
3. 세타 함수방정식, 유수 항등식, 데데킨트 ξ_K
4. 리만 ξ 와 가우스 함수 검사
"""
import math

import pytest

import config
from src.domain.entities.quadratic_field_data import QuadraticFieldData
from src.domain.exceptions import InvalidArgument, InvalidDiscriminant, PoleError
from src.domain.services.archimedean_service import ArchimedeanService
from src.domain.services.number_field_service import NumberFieldService

FUNDAMENTAL = [3, 4, 7, 8, 11, 15, 20, 23]
CLASS_NUMBERS = [1, 1, 1, 1, 1, 2, 2, 3]


class TestDiscriminant:
    """판별식 / 지표 테스트"""

    @pytest.mark.parametrize("D", FUNDAMENTAL)
    def test_fundamental(self, D):
        assert NumberFieldService.is_fundamental(D)

    @pytest.mark.parametrize("D", [1, 2, 5, 12, 16, 27])
    def test_not_fundamental(self, D):
        assert not NumberFieldService.is_fundamental(D)

    def test_require_fundamental_raises(self):
        with pytest.raises(InvalidDiscriminant):
            NumberFieldService.require_fundamental(12)

    @pytest.mark.parametrize("a,n,expected", [
        (-4, 5, 1),
        (-4, 3, -1),
        (-3, 2, -1),
        (-7, 2, 1),
        (-4, 2, 0),
    ])
    def test_kronecker_symbol(self, a, n, expected):
        assert NumberFieldService.kronecker_symbol(a, n) == expected


class TestClassNumber:
    """유수 / 아이디얼 개수 테스트"""

    @pytest.mark.parametrize("D,h", list(zip(FUNDAMENTAL, CLASS_NUMBERS)))
    def test_class_numbers(self, D, h):
        assert NumberFieldService.class_number_bqf(D)[0] == h

    def test_reduced_forms_for_23(self):
        assert NumberFieldService.class_number_bqf(23) == (3, [(1, 1, 6), (2, -1, 3), (2, 1, 3)])

    def test_non_fundamental_rejected(self):
        with pytest.raises(InvalidDiscriminant):
            NumberFieldService.class_number_bqf(12)

    def test_unit_counts(self):
        assert [QuadraticFieldData.unit_count(D) for D in (3, 4, 7)] == [6, 4, 2]

    def test_ideal_counts_gaussian(self):
        """ℤ[i]: a(1..5) = 1, 1, 0, 1, 2"""
        assert NumberFieldService.ideal_counts(4, 5) == [1, 1, 0, 1, 2]

    @pytest.mark.parametrize("D", FUNDAMENTAL)
    def test_ideal_counts_two_paths(self, D):
        """Σ_{d|n} χ(d) = (축소 형식 표현 수)/w"""
        assert NumberFieldService.ideal_counts(D, 30) == NumberFieldService.ideal_counts_by_forms(D, 30)

    @pytest.mark.parametrize("D", [7, 15, 23])
    def test_analytic_class_number(self, D):
        """w√D/(2π)·L(1, χ) ≈ h"""
        # When
        report = NumberFieldService.analytic_class_number(D, terms=200_000)

        # Then
        assert report["ok"]
        assert report["h_forms"] == NumberFieldService.class_number_bqf(D)[0]

    def test_field_data(self):
        data = NumberFieldService.field_data(23, 10)
        assert (data.h, data.w) == (3, 2)
        assert data.to_dict()["a"] == NumberFieldService.ideal_counts(23, 10)


class TestTheta:
    """세타 / 유수 항등식 테스트"""

    @pytest.mark.parametrize("D", [3, 4, 23])
    def test_theta_functional_equation(self, D):
        for y in (1.0, 0.5, 1 / math.sqrt(D)):
            report = NumberFieldService.theta_checks(D, y)
            assert report["ok"], (D, y)
            assert report["truncation"] >= 1

    def test_theta_truncation_floor(self):
        """N_trunc 는 절단 하한"""
        assert NumberFieldService.theta_checks(23, 1.0, N_trunc=50)["truncation"] >= 50

    def test_theta_needs_positive_y(self):
        with pytest.raises(InvalidArgument):
            NumberFieldService.theta_checks(23, 0.0)

    @pytest.mark.parametrize("D", FUNDAMENTAL)
    def test_residue_identity(self, D):
        report = NumberFieldService.residue_identity_check(D)
        assert report["ok"]
        assert report["abs_err"] < 1e-10

    @pytest.mark.parametrize("D", [3, 4, 23])
    def test_residue_identity_tail_relative_to_constant_term(self, D):
        """
        Given: 상수항 h/w (D=3 이면 1/6)
        When: 유수 항등식 검사
        Then: 절단 꼬리 상한이 residue_tail·h/w 미만
        """
        report = NumberFieldService.residue_identity_check(D)
        floor = report["h"] / report["w"]
        assert report["tail_bound"] < config.TOLERANCES['residue_tail'] * floor


class TestDedekind:
    """데데킨트 ξ_K 테스트"""

    @pytest.mark.parametrize("s", [2.5, 0.3 + 2j, -0.5 + 1j])
    def test_functional_equation(self, s):
        assert NumberFieldService.dedekind_functional_equation_check(23, s)["ok"]

    @pytest.mark.parametrize("D", [3, 4, 23])
    def test_residues(self, D):
        """res_{s=1} = h/(w√D), res_{s=0} = -h/w"""
        assert NumberFieldService.dedekind_residues(D)["ok"]

    def test_pole(self):
        with pytest.raises(PoleError):
            NumberFieldService.dedekind_xi(23, 1)


class TestArchimedean:
    """리만 ξ / 가우스 함수 테스트"""

    def test_xi_at_two(self):
        """ξ(2) = π/6"""
        assert abs(ArchimedeanService.riemann_xi(2) - math.pi / 6) < 1e-9

    @pytest.mark.parametrize("s", [3, 0.25, 1.5 + 2j, -1.5])
    def test_xi_symmetry(self, s):
        assert abs(ArchimedeanService.riemann_xi(s) - ArchimedeanService.riemann_xi(1 - s)) < 1e-9

    @pytest.mark.parametrize("s", [0, 1])
    def test_xi_poles(self, s):
        with pytest.raises(PoleError):
            ArchimedeanService.riemann_xi(s)

    def test_xi_truncation(self):
        with pytest.raises(InvalidArgument):
            ArchimedeanService.riemann_xi(2, -1)

    def test_xi_checks(self):
        """고정점, 대칭, 감마 인자 닫힌 형식 모두 통과"""
        assert ArchimedeanService.riemann_xi_checks()["ok"]

    def test_gaussian_checks(self):
        report = ArchimedeanService.gaussian_checks()
        assert report["fourier"]["ok"]
        assert report["mellin"]["ok"]
        assert all(entry["ok"] for entry in report["poisson"])

    def test_gaussian_rejects_non_positive_width(self):
        with pytest.raises(InvalidArgument):
            ArchimedeanService.gaussian_checks(a=0)
