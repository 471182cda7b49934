# -*- coding: utf-8 -*-
"""
유한체 생성 / 연산 / 부분체 매장 테스트

테스트 범위:
1. build_field의 결정적 모듈러스와 입력 검증
2. FieldElement 체 공리 (hypothesis)
3. ElementArray 벡터 연산과 FieldElement 연산의 일치
4. find_embedding 의 환 준동형성과 실패 경우
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.exceptions import DivisionByZero, InvalidPrime, NoEmbedding, SpecMismatch, TooLarge
from src.domain.services.field_arithmetic_service import FieldArithmeticService
from src.domain.value_objects.element_array import ElementArray
from src.domain.value_objects.field_element import FieldElement


F9 = FieldArithmeticService.build_field(3, 2)
indices_f9 = st.integers(min_value=0, max_value=F9.q - 1)


class TestBuildField:
    """build_field 테스트"""

    def test_prime_field_modulus_is_x(self):
        """k = 1 이면 모듈러스는 x"""
        # When
        spec = FieldArithmeticService.build_field(5, 1)

        # Then
        assert spec.q == 5
        assert spec.modulus == (0, 1)

    @pytest.mark.parametrize("p,k,expected", [
        (2, 2, (1, 1, 1)),   # x² + x + 1
        (3, 2, (1, 0, 1)),   # x² + 1
    ])
    def test_lexicographically_smallest_irreducible(self, p, k, expected):
        """계수를 낮은 차수부터 비교한 최소 기약다항식을 모듈러스로 사용"""
        # When
        spec = FieldArithmeticService.build_field(p, k)

        # Then
        assert spec.modulus == expected

    def test_same_input_same_field(self):
        """같은 (p, k)는 항상 같은 체"""
        assert FieldArithmeticService.build_field(2, 4) == FieldArithmeticService.build_field(2, 4)

    def test_non_prime_raises(self):
        with pytest.raises(InvalidPrime):
            FieldArithmeticService.build_field(4, 1)

    def test_cardinality_cap(self):
        """2^21 > 2^20 이면 TooLarge"""
        with pytest.raises(TooLarge):
            FieldArithmeticService.build_field(2, 21)


class TestFieldElement:
    """FieldElement 연산 테스트"""

    @settings(max_examples=60, deadline=None)
    @given(indices_f9, indices_f9, indices_f9)
    def test_distributive_and_commutative(self, i, j, k):
        """(a + b)·c = a·c + b·c, a·b = b·a"""
        # Given
        a, b, c = (FieldElement.from_int(F9, n) for n in (i, j, k))

        # Then
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a - b) + b == a

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=1, max_value=F9.q - 1))
    def test_inverse(self, i):
        """a ≠ 0 이면 a·a⁻¹ = 1, a/a = 1"""
        # Given
        a = FieldElement.from_int(F9, i)

        # Then
        assert a * a.inverse() == FieldElement.one(F9)
        assert a / a == FieldElement.one(F9)
        assert a ** -1 == a.inverse()

    def test_frobenius_fixes_every_element(self):
        """x^q = x (𝔽_q의 모든 원소)"""
        for x in FieldArithmeticService.enumerate_field(F9):
            assert x ** F9.q == x

    def test_enumeration_index_round_trip(self):
        """from_int / to_int 은 열거 순서를 보존"""
        assert [x.to_int() for x in FieldArithmeticService.enumerate_field(F9)] == list(range(F9.q))

    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivisionByZero):
            FieldElement.zero(F9).inverse()

    def test_mixing_fields_raises(self):
        """서로 다른 체의 원소를 섞으면 SpecMismatch"""
        # Given
        F3 = FieldArithmeticService.build_field(3, 1)

        # When / Then
        with pytest.raises(SpecMismatch):
            FieldElement.one(F9) + FieldElement.one(F3)

    def test_dispatcher(self):
        """field_arithmetic 연산 이름 디스패치"""
        # Given
        u = FieldElement(F9, (0, 1))

        # Then: u² = -1 (모듈러스 x² + 1)
        assert FieldArithmeticService.field_arithmetic("pow", u, 2) == -FieldElement.one(F9)
        assert FieldArithmeticService.field_arithmetic("mul", u, u) == u * u
        assert FieldArithmeticService.field_arithmetic("inv", u) * u == FieldElement.one(F9)


class TestElementArray:
    """벡터화 연산 테스트"""

    def test_vector_product_matches_scalar_product(self):
        """ElementArray 곱은 원소별 FieldElement 곱과 같음"""
        # Given
        spec = FieldArithmeticService.build_field(2, 4)
        x = ElementArray.enumerate(spec)

        # When
        squares = x * x

        # Then
        for j in range(spec.q):
            element = FieldElement.from_int(spec, j)
            assert squares.element(j) == element * element

    def test_quadratic_character_counts(self):
        """홀수 표수: 0이 한 개, 제곱수와 비제곱수가 (q-1)/2 개씩"""
        # Given
        x = ElementArray.enumerate(F9)

        # When
        chi = list(x.quadratic_character())

        # Then
        assert chi.count(0) == 1
        assert chi.count(1) == chi.count(-1) == (F9.q - 1) // 2


class TestEmbedding:
    """부분체 매장 테스트"""

    def test_embedding_is_ring_homomorphism(self):
        """φ(a + b) = φ(a) + φ(b), φ(a·b) = φ(a)·φ(b)"""
        # Given
        F4 = FieldArithmeticService.build_field(2, 2)
        F16 = FieldArithmeticService.build_field(2, 4)
        phi = FieldArithmeticService.find_embedding(F4, F16)
        elements = FieldArithmeticService.enumerate_field(F4)

        # Then
        for a in elements:
            for b in elements:
                assert phi(a + b) == phi(a) + phi(b)
                assert phi(a * b) == phi(a) * phi(b)
        images = {phi(a).to_int() for a in elements}
        assert len(images) == F4.q

    def test_extension_of_base_field(self):
        """extension_of(𝔽_3, 2) 는 𝔽_9와 상수 매장"""
        # Given
        F3 = FieldArithmeticService.build_field(3, 1)

        # When
        big, phi = FieldArithmeticService.extension_of(F3, 2)

        # Then
        assert big == F9
        assert phi(FieldElement.from_int(F3, 2)) == FieldElement.from_prime_field(F9, 2)

    def test_degree_not_dividing_raises(self):
        """2 ∤ 3 이면 𝔽_4 는 𝔽_8 에 매장되지 않음"""
        # Given
        F4 = FieldArithmeticService.build_field(2, 2)
        F8 = FieldArithmeticService.build_field(2, 3)

        # When / Then
        with pytest.raises(NoEmbedding):
            FieldArithmeticService.find_embedding(F4, F8)
