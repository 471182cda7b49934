# -*- coding: utf-8 -*-
"""FieldElement Value Object - 𝔽_{p^k}의 원소 (불변)"""

from dataclasses import dataclass
from typing import Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_gcdex, gf_mul, gf_neg, gf_rem, gf_sub

from ..exceptions import DivisionByZero, SpecMismatch
from .field_spec import FieldSpec, from_dense, to_dense


@dataclass(frozen=True)
class FieldElement:
    """𝔽_p[u]/(modulus)의 원소

    coeffs[i]는 u^i의 계수입니다. 열거 순서의 정수 인덱스는
    Σ coeffs[i]·p^i 입니다 (c0가 가장 낮은 자리).

    Examples:
        >>> F4 = FieldSpec(2, 2, (1, 1, 1))
        >>> u = FieldElement(F4, (0, 1))
        >>> u * (u + FieldElement.one(F4))
        FieldElement(1 in F_4)
    """

    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.spec.k:
            raise ValueError(f"expected {self.spec.k} coefficients, got {len(coeffs)}")
        if any(c < 0 or c >= self.spec.p for c in coeffs):
            raise ValueError(f"coefficients must be reduced mod {self.spec.p}: {coeffs}")
        object.__setattr__(self, 'coeffs', coeffs)

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def zero(spec: FieldSpec) -> 'FieldElement':
        return FieldElement(spec, (0,) * spec.k)

    @staticmethod
    def one(spec: FieldSpec) -> 'FieldElement':
        return FieldElement(spec, (1,) + (0,) * (spec.k - 1))

    @staticmethod
    def from_int(spec: FieldSpec, index: int) -> 'FieldElement':
        """열거 인덱스(0 ≤ index < q)로부터 원소 생성

        Raises:
            ValueError: 범위를 벗어난 인덱스
        """
        if not 0 <= index < spec.q:
            raise ValueError(f"index {index} out of range for F_{spec.q}")
        coeffs = []
        for _ in range(spec.k):
            index, digit = divmod(index, spec.p)
            coeffs.append(digit)
        return FieldElement(spec, tuple(coeffs))

    @staticmethod
    def from_prime_field(spec: FieldSpec, value: int) -> 'FieldElement':
        """정수를 𝔽_p 상수로 해석 (mod p 축약)"""
        return FieldElement(spec, (value % spec.p,) + (0,) * (spec.k - 1))

    @staticmethod
    def _from_dense(spec: FieldSpec, dense) -> 'FieldElement':
        reduced = gf_rem(dense, to_dense(spec.modulus), spec.p, ZZ)
        return FieldElement(spec, from_dense(reduced, spec.k))

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    def to_int(self) -> int:
        """열거 인덱스 Σ c_i p^i"""
        index = 0
        for c in reversed(self.coeffs):
            index = index * self.spec.p + c
        return index

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _dense(self):
        return to_dense(self.coeffs)

    def _check(self, other: 'FieldElement') -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    # ------------------------------------------------------------------
    # 체 연산
    # ------------------------------------------------------------------

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement._from_dense(self.spec, gf_add(self._dense(), other._dense(), self.spec.p, ZZ))

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement._from_dense(self.spec, gf_sub(self._dense(), other._dense(), self.spec.p, ZZ))

    def __neg__(self) -> 'FieldElement':
        return FieldElement._from_dense(self.spec, gf_neg(self._dense(), self.spec.p, ZZ))

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return FieldElement._from_dense(self.spec, gf_mul(self._dense(), other._dense(), self.spec.p, ZZ))

    def inverse(self) -> 'FieldElement':
        """확장 유클리드 알고리즘으로 역원 계산

        Raises:
            DivisionByZero: 0의 역원
        """
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in F_{self.spec.q}")
        s, _, _ = gf_gcdex(self._dense(), to_dense(self.spec.modulus), self.spec.p, ZZ)
        # modulus가 기약이므로 gcd는 상수 1 (gf_gcdex는 모닉 gcd를 반환)
        return FieldElement._from_dense(self.spec, s)

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        self._check(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'FieldElement':
        """제곱-곱셈(square-and-multiply) 거듭제곱; 음수 지수는 역원 사용"""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElement.one(self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = "u" if power == 1 else f"u^{power}"
                terms.append(monomial if c == 1 else f"{c}{monomial}")
        return f"FieldElement({' + '.join(terms) or '0'} in F_{self.spec.q})"


