# -*- coding: utf-8 -*-
"""ElementArray Value Object - 𝔽_{p^k} 원소 묶음의 벡터화 연산"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import SpecMismatch
from .field_element import FieldElement
from .field_spec import FieldSpec


@dataclass(frozen=True, eq=False)
class ElementArray:
    """numpy 배열로 표현된 𝔽_{p^k} 원소 묶음

    data의 모양은 (k, n)이며 data[i, j]는 j번째 원소의 u^i 계수입니다.
    n = 1인 배열은 연산 시 브로드캐스트됩니다.

    전수 점 계산에서 모든 x(또는 y)에 대한 다항식 값을 한 번에 계산할 때 사용합니다.
    """

    spec: FieldSpec
    data: np.ndarray

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def enumerate(spec: FieldSpec, start: int = 0, stop: Optional[int] = None) -> 'ElementArray':
        """열거 순서 [start, stop) 구간의 원소 배열

        Args:
            spec: 유한체 명세
            start: 시작 인덱스
            stop: 끝 인덱스 (None이면 q)
        """
        stop = spec.q if stop is None else stop
        index = np.arange(start, stop, dtype=np.int64)
        data = np.empty((spec.k, index.size), dtype=np.int64)
        for i in range(spec.k):
            data[i] = (index // spec.p ** i) % spec.p
        return ElementArray(spec, data)

    @staticmethod
    def constant(element: FieldElement) -> 'ElementArray':
        """단일 원소를 브로드캐스트용 (k, 1) 배열로 변환"""
        data = np.array(element.coeffs, dtype=np.int64).reshape(element.spec.k, 1)
        return ElementArray(element.spec, data)

    @staticmethod
    def zeros(spec: FieldSpec, size: int = 1) -> 'ElementArray':
        return ElementArray(spec, np.zeros((spec.k, size), dtype=np.int64))

    @staticmethod
    def ones(spec: FieldSpec, size: int = 1) -> 'ElementArray':
        data = np.zeros((spec.k, size), dtype=np.int64)
        data[0] = 1
        return ElementArray(spec, data)

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.data.shape[1]

    def element(self, j: int) -> FieldElement:
        return FieldElement(self.spec, tuple(int(c) for c in self.data[:, j]))

    def column(self, j: int) -> 'ElementArray':
        return ElementArray(self.spec, self.data[:, j:j + 1])

    def to_int(self) -> np.ndarray:
        """각 원소의 열거 인덱스"""
        index = np.zeros(self.size, dtype=np.int64)
        for i in range(self.spec.k - 1, -1, -1):
            index = index * self.spec.p + self.data[i]
        return index

    def is_zero(self) -> np.ndarray:
        return ~self.data.any(axis=0)

    def is_one(self) -> np.ndarray:
        mask = self.data[0] == 1
        if self.spec.k > 1:
            mask &= ~self.data[1:].any(axis=0)
        return mask

    def _check(self, other: 'ElementArray') -> None:
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    # ------------------------------------------------------------------
    # 체 연산
    # ------------------------------------------------------------------

    def __add__(self, other: 'ElementArray') -> 'ElementArray':
        self._check(other)
        return ElementArray(self.spec, (self.data + other.data) % self.spec.p)

    def __sub__(self, other: 'ElementArray') -> 'ElementArray':
        self._check(other)
        return ElementArray(self.spec, (self.data - other.data) % self.spec.p)

    def __neg__(self) -> 'ElementArray':
        return ElementArray(self.spec, (-self.data) % self.spec.p)

    def scale(self, c: int) -> 'ElementArray':
        """𝔽_p 스칼라 곱"""
        return ElementArray(self.spec, (self.data * (c % self.spec.p)) % self.spec.p)

    def __mul__(self, other: 'ElementArray') -> 'ElementArray':
        self._check(other)
        p, k = self.spec.p, self.spec.k
        n = max(self.size, other.size)

        # 다항식 곱 (차수 ≤ 2k-2)
        product = np.zeros((2 * k - 1, n), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                product[i + j] += self.data[i] * other.data[j]
            product %= p

        # u^k = -Σ m_i u^i 로 상위 차수부터 축약
        modulus = self.spec.modulus
        for degree in range(2 * k - 2, k - 1, -1):
            lead = product[degree]
            for i in range(k):
                if modulus[i]:
                    product[degree - k + i] = (product[degree - k + i] - lead * modulus[i]) % p
        return ElementArray(self.spec, product[:k].copy())

    def square(self) -> 'ElementArray':
        return self * self

    def __pow__(self, exponent: int) -> 'ElementArray':
        """제곱-곱셈 거듭제곱 (exponent ≥ 0)"""
        if exponent < 0:
            raise ValueError("ElementArray supports non-negative exponents only")
        result = ElementArray.ones(self.spec, self.size)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    # ------------------------------------------------------------------
    # 점 계산용 보조 연산
    # ------------------------------------------------------------------

    def quadratic_character(self) -> np.ndarray:
        """이차 지표 χ(x) ∈ {-1, 0, 1} (홀수 표수, 오일러 판정법)"""
        if self.spec.p == 2:
            raise ValueError("quadratic character requires odd characteristic")
        euler = self ** ((self.spec.q - 1) // 2)
        chi = np.where(euler.is_one(), 1, -1)
        chi[self.is_zero()] = 0
        return chi

    def absolute_trace(self) -> np.ndarray:
        """절대 대각합 Tr_{𝔽_q/𝔽_p}(x) (𝔽_p 값 배열)

        Σ_{i<K} x^{p^i}, K = k. 결과는 𝔽_p에 속하므로 상수 계수만 반환합니다.
        """
        total = self
        conjugate = self
        for _ in range(self.spec.k - 1):
            conjugate = conjugate ** self.spec.p
            total = total + conjugate
        return total.data[0].copy()

    def __repr__(self) -> str:
        return f"ElementArray(F_{self.spec.q}, size={self.size})"
