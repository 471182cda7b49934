# -*- coding: utf-8 -*-
"""HalfPowerScalar Value Object - ℚ(√q)의 원소 a + b·√r (불변)"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Tuple, Union

from sympy import factorint

from ..exceptions import SpecMismatch

RationalLike = Union[int, Fraction]


@lru_cache(maxsize=None)
def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """
    n = s·r² (s는 squarefree)로 분해

    Args:
        n: 양의 정수

    Returns:
        (s, r)
    """
    if n < 1:
        raise ValueError(f"radicand must be positive, got {n}")
    s, r = 1, 1
    for prime, exponent in factorint(n).items():
        r *= prime ** (exponent // 2)
        if exponent % 2:
            s *= prime
    return s, r


@dataclass(frozen=True)
class HalfPowerScalar:
    """a + b·√radicand 형태의 정확한 스칼라

    radicand는 항상 squarefree로 정규화됩니다 (√8 = 2√2).
    b = 0이거나 radicand = 1이면 유리수이며 radicand는 1로 저장됩니다.
    서로 다른 squarefree radicand를 섞으면 SpecMismatch가 발생합니다.

    Examples:
        >>> HalfPowerScalar.sqrt_power(2, -3)
        HalfPowerScalar(0 + 1/4·√2)
        >>> HalfPowerScalar.sqrt_power(4, 1)
        HalfPowerScalar(2)
    """

    a: Fraction
    b: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        a = Fraction(self.a)
        b = Fraction(self.b)
        radicand = int(self.radicand)
        if b == 0:
            radicand = 1
        else:
            s, r = squarefree_decomposition(radicand)
            b *= r
            radicand = s
            if radicand == 1:
                a += b
                b = Fraction(0)
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'radicand', radicand)

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def coerce(value: Union['HalfPowerScalar', RationalLike]) -> 'HalfPowerScalar':
        if isinstance(value, HalfPowerScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return HalfPowerScalar(Fraction(value))
        raise TypeError(f"cannot coerce {type(value).__name__} to HalfPowerScalar")

    @staticmethod
    def zero() -> 'HalfPowerScalar':
        return HalfPowerScalar(Fraction(0))

    @staticmethod
    def one() -> 'HalfPowerScalar':
        return HalfPowerScalar(Fraction(1))

    @staticmethod
    def sqrt_power(q: int, twice_exponent: int) -> 'HalfPowerScalar':
        """q^{twice_exponent/2} 를 정확하게 표현

        Args:
            q: 양의 정수
            twice_exponent: 지수의 2배 (반정수 지수 허용)
        """
        whole, half = divmod(twice_exponent, 2)
        base = Fraction(q) ** whole
        if half == 0:
            return HalfPowerScalar(base)
        return HalfPowerScalar(Fraction(0), base, q)

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'HalfPowerScalar':
        return HalfPowerScalar(Fraction(data["a"]), Fraction(data["b"]), int(data["q"]))

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        """유리수 값 반환

        Raises:
            ValueError: √ 성분이 남아 있는 경우
        """
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def conjugate(self) -> 'HalfPowerScalar':
        return HalfPowerScalar(self.a, -self.b, self.radicand)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.radicand

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.radicand)

    def to_dict(self) -> Dict[str, Any]:
        """보고서 직렬화 형식 {"a": "p/q", "b": "p/q", "q": r} (부동소수점 사용 안 함)"""
        return {"a": str(self.a), "b": str(self.b), "q": self.radicand}

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------

    def _common_radicand(self, other: 'HalfPowerScalar') -> int:
        if self.radicand == 1:
            return other.radicand
        if other.radicand == 1 or other.radicand == self.radicand:
            return self.radicand
        raise SpecMismatch(f"cannot mix sqrt({self.radicand}) and sqrt({other.radicand})")

    def __add__(self, other) -> 'HalfPowerScalar':
        other = HalfPowerScalar.coerce(other)
        r = self._common_radicand(other)
        return HalfPowerScalar(self.a + other.a, self.b + other.b, r)

    __radd__ = __add__

    def __neg__(self) -> 'HalfPowerScalar':
        return HalfPowerScalar(-self.a, -self.b, self.radicand)

    def __sub__(self, other) -> 'HalfPowerScalar':
        return self + (-HalfPowerScalar.coerce(other))

    def __rsub__(self, other) -> 'HalfPowerScalar':
        return HalfPowerScalar.coerce(other) - self

    def __mul__(self, other) -> 'HalfPowerScalar':
        other = HalfPowerScalar.coerce(other)
        r = self._common_radicand(other)
        return HalfPowerScalar(
            self.a * other.a + self.b * other.b * r,
            self.a * other.b + self.b * other.a,
            r,
        )

    __rmul__ = __mul__

    def inverse(self) -> 'HalfPowerScalar':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero HalfPowerScalar")
        return HalfPowerScalar(self.a / n, -self.b / n, self.radicand)

    def __truediv__(self, other) -> 'HalfPowerScalar':
        return self * HalfPowerScalar.coerce(other).inverse()

    def __rtruediv__(self, other) -> 'HalfPowerScalar':
        return HalfPowerScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'HalfPowerScalar':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = HalfPowerScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, HalfPowerScalar):
            return NotImplemented
        return (self.a, self.b, self.radicand) == (other.a, other.b, other.radicand)

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"HalfPowerScalar({self.a})"
        return f"HalfPowerScalar({self.a} + {self.b}·√{self.radicand})"
