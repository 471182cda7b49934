# -*- coding: utf-8 -*-
"""FieldSpec Value Object - 유한체 𝔽_{p^k} 명세 (불변)"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_rem

from ..exceptions import InvalidPrime, InvalidArgument


def to_dense(coeffs: Sequence[int]) -> list:
    """오름차순 계수 리스트를 galoistools 형식(내림차순)으로 변환"""
    dense = [int(c) for c in reversed(coeffs)]
    while dense and dense[0] == 0:
        dense.pop(0)
    return dense


def from_dense(dense: Sequence[int], length: int) -> Tuple[int, ...]:
    """galoistools 형식(내림차순)을 길이 length의 오름차순 튜플로 변환"""
    ascending = [int(c) for c in reversed(dense)]
    ascending.extend([0] * (length - len(ascending)))
    return tuple(ascending[:length])


def monic_polynomials(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """
    차수 degree인 모닉 다항식을 사전순으로 생성

    계수는 낮은 차수부터 비교합니다: (c0, c1, ..., c_{d-1}, 1).

    Args:
        p: 소수
        degree: 차수

    Yields:
        오름차순 계수 튜플
    """
    for lower in itertools.product(range(p), repeat=degree):
        # itertools.product는 마지막 자리가 가장 빠르게 변하므로 뒤집어서 c0가 가장 빠르게 변하도록
        yield tuple(reversed(lower)) + (1,)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """
    차수 ≤ k/2 인 모든 모닉 다항식으로 나누어 보는 기약성 판정

    Args:
        modulus: 오름차순 계수 (모닉)
        p: 소수

    Returns:
        기약이면 True
    """
    k = len(modulus) - 1
    dense = to_dense(modulus)
    for degree in range(1, k // 2 + 1):
        for candidate in monic_polynomials(p, degree):
            if not gf_rem(dense, to_dense(candidate), p, ZZ):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """유한체 𝔽_{p^k} = 𝔽_p[u]/(modulus) 명세

    Attributes:
        p: 표수 (소수)
        k: 확대 차수 (≥ 1)
        modulus: 모닉 기약 다항식 계수 (오름차순, 길이 k+1)

    Examples:
        >>> FieldSpec(p=2, k=2, modulus=(1, 1, 1)).q
        4
    """

    p: int
    k: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise InvalidPrime(f"p={self.p} is not prime")
        if self.k < 1:
            raise InvalidArgument(f"extension degree must be >= 1, got k={self.k}")

        modulus = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, 'modulus', modulus)

        if len(modulus) != self.k + 1 or modulus[-1] != 1:
            raise InvalidArgument(f"modulus must be monic of degree {self.k}: {modulus}")
        if any(c < 0 or c >= self.p for c in modulus):
            raise InvalidArgument(f"modulus coefficients must be reduced mod {self.p}: {modulus}")
        if not is_irreducible(modulus, self.p):
            raise InvalidArgument(f"modulus {modulus} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        """체의 원소 개수 p^k"""
        return self.p ** self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def describe_modulus(self) -> str:
        """모듈러스를 사람이 읽을 수 있는 문자열로 변환 (예: 'x^2 + x + 1')"""
        terms = []
        for power in range(self.k, -1, -1):
            c = self.modulus[power]
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                terms.append(monomial if c == 1 else f"{c}*{monomial}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={self.describe_modulus()})"
