# -*- coding: utf-8 -*-
"""RandomInputService - 검증 스위트용 시드 고정 무작위 입력 생성"""

import logging
import random
from fractions import Fraction
from typing import Dict, Tuple

from ...domain.entities.graded_function import GradedFunction
from ...domain.entities.torus_rational import TorusRational
from ...domain.value_objects.laurent_polynomial import LaurentPolynomial

logger = logging.getLogger(__name__)


class RandomInputService:
    """무작위 시험 입력 생성기

    random.Random(seed) 인스턴스를 독립적으로 사용하므로
    같은 시드와 같은 호출 순서에서 결과가 항상 같습니다.

    Examples:
        >>> a = RandomInputService(1).finite_function((-6, 6))
        >>> b = RandomInputService(1).finite_function((-6, 6))
        >>> a == b
        True
    """

    def __init__(self, seed: int = 0, max_numerator: int = 9, max_denominator: int = 6):
        self.seed = seed
        self._rng = random.Random(seed)
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator

    def rational(self, allow_zero: bool = True) -> Fraction:
        while True:
            value = Fraction(
                self._rng.randint(-self.max_numerator, self.max_numerator),
                self._rng.randint(1, self.max_denominator),
            )
            if allow_zero or value != 0:
                return value

    def choice(self, options):
        return self._rng.choice(list(options))

    def randint(self, low: int, high: int) -> int:
        return self._rng.randint(low, high)

    def _values(self, low: int, high: int) -> Dict[int, Fraction]:
        """[low, high] 위 무작위 값 (약 절반은 0)"""
        return {n: self.rational() for n in range(low, high + 1) if self._rng.random() < 0.6}

    # ------------------------------------------------------------------
    # 함수 공간
    # ------------------------------------------------------------------

    def finite_function(self, support: Tuple[int, int] = (-6, 6)) -> GradedFunction:
        """D 원소 (지지 ⊂ support, 유리수 값)"""
        return GradedFunction.finite(self._values(*support))

    def d_plus_function(self, window: Tuple[int, int] = (-5, 5)) -> GradedFunction:
        """D_plus 원소 (무작위 threshold, 상수 꼬리)"""
        threshold = self._rng.randint(window[0] + 1, window[1])
        values = self._values(window[0], threshold - 1)
        return GradedFunction.eventually_constant(values, threshold, self.rational())

    def d_plus_plus_function(self, q: int, window: Tuple[int, int] = (-5, 5)) -> GradedFunction:
        """D_plus_plus 원소 (꼬리 a·q^n + b, a ≠ 0)"""
        threshold = self._rng.randint(window[0] + 1, window[1])
        values = self._values(window[0], threshold - 1)
        return GradedFunction.eventually_geometric(
            values, threshold, self.rational(allow_zero=False), self.rational(), q)

    def function_in(self, space_index: int, q: int) -> GradedFunction:
        """0: D, 1: D_plus, 2: D_plus_plus"""
        if space_index == 0:
            return self.finite_function((-5, 5))
        if space_index == 1:
            return self.d_plus_function()
        return self.d_plus_plus_function(q)

    # ------------------------------------------------------------------
    # 원환면 유리함수
    # ------------------------------------------------------------------

    def torus_rational(self, q: int, degree: int = 8) -> TorusRational:
        """ℂ₊₊[𝕋₀] 원소 (차수 ≤ degree 로랑 분자, 무작위 극 플래그)"""
        low = self._rng.randint(-degree // 2, 0)
        coefficients = {n: self.rational() for n in range(low, low + degree + 1)}
        numerator = LaurentPolynomial.from_mapping(coefficients)
        return TorusRational(numerator, self._rng.randint(0, 1), self._rng.randint(0, 1), q)
