# -*- coding: utf-8 -*-
"""FieldArithmeticService - 유한체 생성, 연산, 부분체 매장"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Literal, Tuple, Union

from sympy import isprime

import config
from ..exceptions import InvalidArgument, InvalidPrime, NoEmbedding, SpecMismatch, TooLarge
from ..value_objects.element_array import ElementArray
from ..value_objects.field_element import FieldElement
from ..value_objects.field_spec import FieldSpec, is_irreducible, monic_polynomials

logger = logging.getLogger(__name__)

FieldOp = Literal["add", "mul", "inv", "pow"]


@lru_cache(maxsize=None)
def _build_field_cached(p: int, k: int) -> FieldSpec:
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for candidate in monic_polynomials(p, k):
        if is_irreducible(candidate, p):
            logger.debug(f"F_{p}^{k}: modulus {candidate}")
            return FieldSpec(p, k, candidate)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldEmbedding:
    """부분체 매장 small → big

    small의 생성원 u를 big 안의 small.modulus의 근 image로 보냅니다.
    a = Σ a_i u^i ↦ Σ a_i image^i.
    """

    small: FieldSpec
    big: FieldSpec
    image: FieldElement

    def __call__(self, a: FieldElement) -> FieldElement:
        if a.spec != self.small:
            raise SpecMismatch(f"{a.spec!r} is not the embedding source {self.small!r}")
        result = FieldElement.zero(self.big)
        power = FieldElement.one(self.big)
        for c in a.coeffs:
            if c:
                result = result + FieldElement.from_prime_field(self.big, c) * power
            power = power * self.image
        return result


class FieldArithmeticService:
    """𝔽_p, 𝔽_{p^k}의 결정적 생성과 정확한 연산을 담당하는 도메인 서비스"""

    @staticmethod
    def build_field(p: int, k: int) -> FieldSpec:
        """
        𝔽_{p^k} 생성

        모듈러스는 차수 k인 모닉 기약다항식 중 계수를 낮은 차수부터 비교한
        사전순 최소값입니다. k = 1이면 모듈러스는 x입니다.

        Args:
            p: 소수
            k: 확대 차수 (≥ 1)

        Returns:
            FieldSpec

        Raises:
            InvalidPrime: p가 소수가 아님
            TooLarge: p^k > FIELD_CARDINALITY_CAP
        """
        if not isprime(p):
            raise InvalidPrime(f"p={p} is not prime")
        if k < 1:
            raise InvalidArgument(f"extension degree must be >= 1, got k={k}")
        if p ** k > config.FIELD_CARDINALITY_CAP:
            raise TooLarge(f"|F_{p}^{k}| = {p ** k} exceeds cap {config.FIELD_CARDINALITY_CAP}")
        return _build_field_cached(p, k)

    @staticmethod
    def field_arithmetic(op: FieldOp, a: FieldElement, b: Union[FieldElement, int, None] = None) -> FieldElement:
        """
        체 연산 디스패처

        Args:
            op: "add" | "mul" | "inv" | "pow"
            a: 피연산자
            b: 두 번째 피연산자 (pow이면 지수)

        Raises:
            DivisionByZero: inv(0)
            SpecMismatch: 서로 다른 체의 원소
        """
        if op == "add":
            return a + b
        if op == "mul":
            return a * b
        if op == "inv":
            return a.inverse()
        if op == "pow":
            return a ** int(b)
        raise InvalidArgument(f"unknown field operation: {op}")

    @staticmethod
    def enumerate_field(spec: FieldSpec) -> List[FieldElement]:
        """계수 벡터 계수 순서(c0가 가장 빠르게 변함)의 전체 원소 리스트"""
        return [FieldElement.from_int(spec, i) for i in range(spec.q)]

    @staticmethod
    def find_embedding(small: FieldSpec, big: FieldSpec) -> FieldEmbedding:
        """
        small → big 매장 구성

        small.modulus의 근을 big의 열거 순서대로 찾아 첫 번째 근을 생성원의 상으로 씁니다.

        Raises:
            NoEmbedding: 표수가 다르거나 small.k ∤ big.k
        """
        if small.p != big.p or big.k % small.k != 0:
            raise NoEmbedding(f"F_{small.q} does not embed in F_{big.q}")
        if small.is_prime_field:
            return FieldEmbedding(small, big, FieldElement.zero(big))

        chunk = config.COUNT_CHUNK_SIZE
        for start in range(0, big.q, chunk):
            x = ElementArray.enumerate(big, start, min(big.q, start + chunk))
            value = ElementArray.zeros(big, x.size)
            for c in reversed(small.modulus):
                value = value * x + ElementArray.constant(FieldElement.from_prime_field(big, c))
            roots = value.is_zero().nonzero()[0]
            if roots.size:
                image = x.element(int(roots[0]))
                logger.debug(f"embedding F_{small.q} -> F_{big.q}: u -> {image!r}")
                return FieldEmbedding(small, big, image)
        raise NoEmbedding(f"no root of {small.describe_modulus()} in F_{big.q}")

    @staticmethod
    def enumerate_and_embed(small: FieldSpec, big: FieldSpec) -> Tuple[List[FieldElement], FieldEmbedding]:
        """
        big의 전체 원소 열거와 small → big 매장

        Returns:
            (big 원소 리스트, 매장 사상)

        Raises:
            NoEmbedding: 차수가 나누어떨어지지 않음
        """
        embedding = FieldArithmeticService.find_embedding(small, big)
        return FieldArithmeticService.enumerate_field(big), embedding

    @staticmethod
    def extension_of(base: FieldSpec, m: int) -> Tuple[FieldSpec, FieldEmbedding]:
        """𝔽_{q^m} = 𝔽_{p^{km}} 과 계수체 매장"""
        big = FieldArithmeticService.build_field(base.p, base.k * m)
        return big, FieldArithmeticService.find_embedding(base, big)
