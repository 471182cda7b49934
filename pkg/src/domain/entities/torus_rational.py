# -*- coding: utf-8 -*-
"""TorusRational 엔티티 - 원환면 위 유리함수 N(z) / ((1-z)^{e1}(1-qz)^{e2})"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from ..exceptions import InvalidArgument, UnsupportedPole
from ..value_objects.half_power_scalar import HalfPowerScalar
from ..value_objects.laurent_polynomial import LaurentPolynomial

ScalarLike = Union[HalfPowerScalar, int, Fraction]


@dataclass(frozen=True, eq=False)
class TorusRational:
    """ℂ[𝕋], ℂ₊[𝕋], ℂ₊₊[𝕋₀]의 원소

    극은 z = 1, z = q⁻¹ 에서 1차까지만 허용되며 (e1, e2 ∈ {0, 1}),
    생성 시 약분 가능한 인수를 제거해 정규형으로 만듭니다.

    Attributes:
        numerator: 로랑 다항식 N(z)
        e1: z = 1 극 여부
        e2: z = q⁻¹ 극 여부
        q: 기준 체 크기 (e2 = 1 또는 대합 사용 시 필요)

    Examples:
        >>> TorusRational(LaurentPolynomial.from_ascending([1, -1]), 1, 0)
        TorusRational(LaurentPolynomial(1), e1=0, e2=0, q=None)
    """

    numerator: LaurentPolynomial
    e1: int = 0
    e2: int = 0
    q: Optional[int] = None

    def __post_init__(self):
        if self.e1 not in (0, 1) or self.e2 not in (0, 1):
            raise UnsupportedPole(f"pole orders must be 0 or 1, got e1={self.e1}, e2={self.e2}")
        if self.e2 and (self.q is None or self.q < 2):
            raise InvalidArgument("a pole at 1/q needs q >= 2")

        numerator, e1, e2 = self.numerator, self.e1, self.e2
        if e1:
            quotient, remainder = numerator.divide_one_minus(1)
            if remainder.is_zero():
                numerator, e1 = quotient, 0
        if e2:
            quotient, remainder = numerator.divide_one_minus(self.q)
            if remainder.is_zero():
                numerator, e2 = quotient, 0
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'e1', e1)
        object.__setattr__(self, 'e2', e2)

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def laurent(numerator: LaurentPolynomial, q: Optional[int] = None) -> 'TorusRational':
        return TorusRational(numerator, 0, 0, q)

    @staticmethod
    def monomial(n: int, c: ScalarLike = 1, q: Optional[int] = None) -> 'TorusRational':
        return TorusRational(LaurentPolynomial.monomial(n, c), 0, 0, q)

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    def is_laurent(self) -> bool:
        return not (self.e1 or self.e2)

    def denominator(self) -> LaurentPolynomial:
        """(1-z)^{e1}(1-qz)^{e2}"""
        result = LaurentPolynomial.monomial(0, 1)
        if self.e1:
            result = result * LaurentPolynomial.from_ascending([1, -1])
        if self.e2:
            result = result * LaurentPolynomial.from_ascending([1, -self.q])
        return result

    def evaluate(self, z: ScalarLike) -> HalfPowerScalar:
        """극이 아닌 점에서의 값"""
        denominator = self.denominator().evaluate(z)
        if denominator.is_zero():
            raise UnsupportedPole(f"R has a pole at z = {z}")
        return self.numerator.evaluate(z) / denominator

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------

    def shift(self, k: int) -> 'TorusRational':
        """z^k 곱"""
        return TorusRational(self.numerator.shift(k), self.e1, self.e2, self.q)

    def scale(self, c: ScalarLike) -> 'TorusRational':
        return TorusRational(self.numerator * c, self.e1, self.e2, self.q)

    def __add__(self, other: 'TorusRational') -> 'TorusRational':
        q = self.q if self.q is not None else other.q
        if self.q is not None and other.q is not None and self.q != other.q and (self.e2 or other.e2):
            raise InvalidArgument(f"cannot add rational functions over q={self.q} and q={other.q}")
        e1 = max(self.e1, other.e1)
        e2 = max(self.e2, other.e2)
        left = self.numerator
        right = other.numerator
        if e1 and not self.e1:
            left = left * LaurentPolynomial.from_ascending([1, -1])
        if e1 and not other.e1:
            right = right * LaurentPolynomial.from_ascending([1, -1])
        if e2 and not self.e2:
            left = left * LaurentPolynomial.from_ascending([1, -q])
        if e2 and not other.e2:
            right = right * LaurentPolynomial.from_ascending([1, -q])
        return TorusRational(left + right, e1, e2, q)

    def __neg__(self) -> 'TorusRational':
        return self.scale(-1)

    def __sub__(self, other: 'TorusRational') -> 'TorusRational':
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusRational):
            return NotImplemented
        same = (self.numerator, self.e1, self.e2) == (other.numerator, other.e1, other.e2)
        if same and self.e2:
            return self.q == other.q
        return same

    def __hash__(self) -> int:
        return hash((self.numerator, self.e1, self.e2))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "numerator": {str(n): c.to_dict() for n, c in self.numerator},
            "e1": self.e1,
            "e2": self.e2,
            "q": self.q,
        }

    def __repr__(self) -> str:
        return f"TorusRational({self.numerator!r}, e1={self.e1}, e2={self.e2}, q={self.q})"
