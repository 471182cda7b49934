# -*- coding: utf-8 -*-
"""LaurentPolynomial Value Object - ℚ(√q) 계수의 로랑 다항식 (불변)"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from .half_power_scalar import HalfPowerScalar

ScalarLike = Union[HalfPowerScalar, int, Fraction]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Σ c_n z^n (유한 합)

    terms는 지수 오름차순의 (n, c_n) 튜플이며 0 계수는 저장하지 않습니다.

    Examples:
        >>> LaurentPolynomial.from_mapping({-1: 2, 3: 1})
        LaurentPolynomial(2·z^-1 + z^3)
    """

    terms: Tuple[Tuple[int, HalfPowerScalar], ...] = ()

    def __post_init__(self):
        cleaned = {}
        for n, c in self.terms:
            c = HalfPowerScalar.coerce(c)
            cleaned[int(n)] = cleaned.get(int(n), HalfPowerScalar.zero()) + c
        normalized = tuple(sorted((n, c) for n, c in cleaned.items() if not c.is_zero()))
        object.__setattr__(self, 'terms', normalized)

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def from_mapping(coeffs: Mapping[int, ScalarLike]) -> 'LaurentPolynomial':
        return LaurentPolynomial(tuple(coeffs.items()))

    @staticmethod
    def monomial(n: int, c: ScalarLike = 1) -> 'LaurentPolynomial':
        return LaurentPolynomial(((n, c),))

    @staticmethod
    def from_ascending(coeffs, offset: int = 0) -> 'LaurentPolynomial':
        """오름차순 계수 리스트 c_0, c_1, ... 로부터 Σ c_i z^{offset+i}"""
        return LaurentPolynomial(tuple((offset + i, c) for i, c in enumerate(coeffs)))

    @staticmethod
    def zero() -> 'LaurentPolynomial':
        return LaurentPolynomial()

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    def as_dict(self) -> Dict[int, HalfPowerScalar]:
        return dict(self.terms)

    def __iter__(self) -> Iterator[Tuple[int, HalfPowerScalar]]:
        return iter(self.terms)

    def coefficient(self, n: int) -> HalfPowerScalar:
        for m, c in self.terms:
            if m == n:
                return c
        return HalfPowerScalar.zero()

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> Optional[int]:
        return self.terms[0][0] if self.terms else None

    @property
    def max_degree(self) -> Optional[int]:
        return self.terms[-1][0] if self.terms else None

    def evaluate(self, z: ScalarLike) -> HalfPowerScalar:
        """z에서의 값 (z ≠ 0 또는 음의 지수 없음)"""
        z = HalfPowerScalar.coerce(z)
        total = HalfPowerScalar.zero()
        for n, c in self.terms:
            total = total + c * z ** n
        return total

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------

    def __add__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        return LaurentPolynomial(self.terms + other.terms)

    def __neg__(self) -> 'LaurentPolynomial':
        return LaurentPolynomial(tuple((n, -c) for n, c in self.terms))

    def __sub__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        return self + (-other)

    def __mul__(self, other: Union['LaurentPolynomial', ScalarLike]) -> 'LaurentPolynomial':
        if not isinstance(other, LaurentPolynomial):
            c = HalfPowerScalar.coerce(other)
            return LaurentPolynomial(tuple((n, a * c) for n, a in self.terms))
        return LaurentPolynomial(tuple(
            (n + m, a * b) for n, a in self.terms for m, b in other.terms
        ))

    __rmul__ = __mul__

    def shift(self, k: int) -> 'LaurentPolynomial':
        """z^k 곱"""
        return LaurentPolynomial(tuple((n + k, c) for n, c in self.terms))

    def substitute_scaled_inverse(self, q: int) -> 'LaurentPolynomial':
        """N(z) ↦ N(q⁻¹z⁻¹): 계수 c_n z^n 이 c_n q^{-n} z^{-n} 이 됨"""
        return LaurentPolynomial(tuple(
            (-n, c * Fraction(q) ** (-n)) for n, c in self.terms
        ))

    def divide_one_minus(self, root_inverse: ScalarLike) -> Tuple['LaurentPolynomial', HalfPowerScalar]:
        """
        (1 - c·z)로 나눈 몫과 나머지

        N(z) = z^v·A(z)로 쓰고 A(z) = (1 - c z)B(z) + r 을 낮은 차수부터 풉니다.
        나머지 r = 0 ⇔ N(1/c) = 0.

        Args:
            root_inverse: c

        Returns:
            (z^v·B(z), 최고차에 남는 나머지 계수)
        """
        if not self.terms:
            return LaurentPolynomial.zero(), HalfPowerScalar.zero()
        c = HalfPowerScalar.coerce(root_inverse)
        v = self.min_degree
        degree = self.max_degree - v
        a = [self.coefficient(v + j) for j in range(degree + 1)]
        b = []
        previous = HalfPowerScalar.zero()
        for j in range(degree):
            current = a[j] + c * previous
            b.append(current)
            previous = current
        remainder = a[degree] + c * previous
        return LaurentPolynomial.from_ascending(b, v), remainder

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPolynomial(0)"
        parts = []
        for n, c in self.terms:
            coeff = str(c.a) if c.is_rational() else f"({c.a}+{c.b}√{c.radicand})"
            if n == 0:
                parts.append(coeff)
            else:
                monomial = f"z^{n}" if n != 1 else "z"
                parts.append(monomial if coeff == "1" else f"{coeff}·{monomial}")
        return f"LaurentPolynomial({' + '.join(parts)})"
