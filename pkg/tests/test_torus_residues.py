# -*- coding: utf-8 -*-
"""
원환면 유리함수 / 유수 테스트

테스트 범위:
1. HalfPowerScalar, TorusRational 정규화
2. Mellin 변환과 역변환
3. 대합 i*, 국소 푸리에 변환의 정의역
4. 유수 정리 (합 = 0), 대합 호환, Poisson 유수 항등식
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.application.services.random_input_service import RandomInputService
from src.domain.entities.graded_function import GradedFunction
from src.domain.entities.torus_rational import TorusRational
from src.domain.exceptions import InvalidArgument, NotInSpace, SpecMismatch, UnsupportedPole
from src.domain.services.graded_space_service import GradedSpaceService
from src.domain.services.torus_residue_service import TorusResidueService
from src.domain.value_objects.half_power_scalar import HalfPowerScalar
from src.domain.value_objects.laurent_polynomial import LaurentPolynomial

seeds = st.integers(min_value=0, max_value=10_000)


class TestHalfPowerScalar:
    """ℚ(√q) 스칼라 테스트"""

    def test_half_integer_power(self):
        """2^{-3/2} = ¼·√2"""
        assert HalfPowerScalar.sqrt_power(2, -3) == HalfPowerScalar(0, Fraction(1, 4), 2)

    def test_square_radicand_is_rational(self):
        assert HalfPowerScalar.sqrt_power(4, 1) == 2
        assert HalfPowerScalar(0, 1, 8) == HalfPowerScalar(0, 2, 2)

    def test_product_of_conjugates(self):
        """(1 + √2)(1 - √2) = -1"""
        x = HalfPowerScalar(1, 1, 2)
        assert x * x.conjugate() == -1
        assert x * x.inverse() == 1

    def test_mixed_radicands_raise(self):
        with pytest.raises(SpecMismatch):
            HalfPowerScalar(0, 1, 2) + HalfPowerScalar(0, 1, 3)


class TestTorusRational:
    """TorusRational 정규형 테스트"""

    def test_common_factor_cancels(self):
        """(1 - z)/(1 - z) = 1"""
        # When
        R = TorusRational(LaurentPolynomial.from_ascending([1, -1]), 1, 0)

        # Then
        assert R == TorusRational.monomial(0, 1)
        assert R.is_laurent()

    def test_pole_order_above_one_rejected(self):
        with pytest.raises(UnsupportedPole):
            TorusRational(LaurentPolynomial.monomial(0, 1), 2, 0)

    def test_evaluate_at_pole_rejected(self):
        with pytest.raises(UnsupportedPole):
            TorusRational(LaurentPolynomial.monomial(0, 1), 1, 0).evaluate(1)


class TestMellin:
    """Mellin 변환 테스트"""

    def test_step_function(self):
        """M(δ_{(≥0)}) = 1/(1 - z)"""
        assert TorusResidueService.mellin(GradedFunction.step(0)) == TorusRational(LaurentPolynomial.monomial(0, 1), 1, 0)

    def test_geometric_tail(self):
        """M(n ↦ 2^n, n ≥ 0) = 1/(1 - 2z)"""
        f = GradedFunction.eventually_geometric({}, 0, 1, 0, 2)
        assert TorusResidueService.mellin(f) == TorusRational(LaurentPolynomial.monomial(0, 1), 0, 1, 2)

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.integers(min_value=0, max_value=2), st.sampled_from([2, 3, 5]))
    def test_round_trip(self, seed, space_index, q):
        """M⁻¹ ∘ M = id (세 공간 모두)"""
        # Given
        f = RandomInputService(seed).function_in(space_index, q)

        # When
        restored = TorusResidueService.mellin_inverse(TorusResidueService.mellin(f))

        # Then
        assert restored == f


class TestInvolutionAndFourier:
    """대합 / 국소 푸리에 테스트"""

    def test_involution_of_monomial(self):
        """i*(z) = q⁻¹z⁻¹"""
        pulled = TorusResidueService.involution_pullback(TorusRational.monomial(1, 1, 2))
        assert pulled == TorusRational.monomial(-1, Fraction(1, 2), 2)

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.sampled_from([2, 3, 4]))
    def test_involution_is_involutive(self, seed, q):
        """i* ∘ i* = id"""
        R = RandomInputService(seed).torus_rational(q)
        assert TorusResidueService.involution_pullback(TorusResidueService.involution_pullback(R)) == R

    def test_involution_swaps_poles(self, zetas):
        """F_D 의 극 (1, 1/q) 은 i* 후에도 두 극"""
        pulled = TorusResidueService.involution_pullback(TorusResidueService.standard_global(zetas["elliptic_f2"], 0))
        assert (pulled.e1, pulled.e2) == (1, 1)

    @pytest.mark.parametrize("d", [-3, 0, 1, 4])
    def test_standard_function_duality(self, zetas, d):
        """i* F_D = q^{1-g-d}·F_{2-2g-d}"""
        for name, zeta in zetas.items():
            q, g = zeta.q, zeta.g
            pulled = TorusResidueService.involution_pullback(TorusResidueService.standard_global(zeta, d))
            expected = TorusResidueService.standard_global(zeta, 2 - 2 * g - d).scale(Fraction(q) ** (1 - g - d))
            assert pulled == expected, name

    def test_local_fourier_needs_c_plus(self):
        """1/q 극이 있으면 NotInSpace"""
        R = TorusRational(LaurentPolynomial.monomial(0, 1), 0, 1, 3)
        with pytest.raises(NotInSpace):
            TorusResidueService.torus_fourier_local(R, 3, 0)

    @settings(max_examples=30, deadline=None)
    @given(seeds, st.sampled_from([2, 3, 5]), st.integers(min_value=-2, max_value=3))
    def test_local_fourier_matches_graded_side(self, seed, q_x, k_x):
        """M ∘ F_x = F_x ∘ M (D_plus)"""
        # Given
        f = RandomInputService(seed).d_plus_function()

        # When
        torus_side = TorusResidueService.torus_fourier_local(TorusResidueService.mellin(f), q_x, k_x)
        graded_side = TorusResidueService.mellin(GradedSpaceService.local_fourier(f, q_x, k_x))

        # Then
        assert torus_side == graded_side


class TestResidues:
    """유수 테스트"""

    @settings(max_examples=60, deadline=None)
    @given(seeds, st.sampled_from([2, 3, 4, 5]))
    def test_residue_sum_vanishes(self, seed, q):
        """네 점 (0, 1, 1/q, ∞) 의 유수 합 = 0"""
        R = RandomInputService(seed).torus_rational(q)
        assert TorusResidueService.residue_report(R).total == 0

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.sampled_from([2, 3, 4]))
    def test_involution_compatibility(self, seed, q):
        """res_P(η) = res_{i(P)}(i*η)"""
        R = RandomInputService(seed).torus_rational(q)
        assert TorusResidueService.involution_residue_check(R)["ok"]

    def test_standard_function_residues(self, zetas):
        """ℙ¹/𝔽_2: res_1(F_0 dz/z) = 1, res_{1/q} = -2"""
        # When
        report = TorusResidueService.residue_report(TorusResidueService.standard_global(zetas["p1_f2"], 0))

        # Then
        assert report.at("1") == 1
        assert report.at("q_inv") == -2
        assert report.total == 0

    @pytest.mark.parametrize("d", [-5, -1, 0, 3, 5])
    @pytest.mark.parametrize("shift", [-3, 0, 2])
    def test_poisson(self, zetas, d, shift):
        for name, zeta in zetas.items():
            assert TorusResidueService.poisson_residue_check(zeta, d, shift)["ok"], name

    def test_unknown_point_rejected(self):
        with pytest.raises(InvalidArgument):
            TorusResidueService.residue_at(TorusRational.monomial(0, 1), "2")
