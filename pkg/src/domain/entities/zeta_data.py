# -*- coding: utf-8 -*-
"""ZetaData 엔티티 - Z_C(t) = P(t) / ((1-t)(1-qt))"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..exceptions import InvalidArgument


@dataclass(frozen=True)
class ZetaData:
    """곡선 제타 함수의 유일한 데이터 원천 (q, g, P)

    생성 시 길이 2g+1, P(0) = 1, P(1) ≥ 1 을 검사합니다.
    계수 대칭 a_{2g-i} = q^{g-i}·a_i 는 functional_equation_check가 보고합니다
    (대칭이 깨진 합성 입력도 다룰 수 있도록).

    Attributes:
        q: 계수체 크기
        g: 종수
        coefficients: P의 정수 계수 (t에 대해 오름차순, 길이 2g+1)
    """

    q: int
    g: int
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, 'coefficients', coefficients)
        if self.q < 2:
            raise InvalidArgument(f"q must be >= 2, got {self.q}")
        if self.g < 0:
            raise InvalidArgument(f"genus must be >= 0, got {self.g}")
        if len(coefficients) != 2 * self.g + 1:
            raise InvalidArgument(f"P must have 2g+1 = {2 * self.g + 1} coefficients, got {len(coefficients)}")
        if coefficients[0] != 1:
            raise InvalidArgument(f"P(0) must be 1, got {coefficients[0]}")
        if sum(coefficients) < 1:
            raise InvalidArgument(f"P(1) must be >= 1, got {sum(coefficients)}")

    @property
    def class_number(self) -> int:
        """h = P(1) = #Pic⁰(C)(𝔽_q)"""
        return sum(self.coefficients)

    @property
    def canonical_degree(self) -> int:
        """deg K = 2g - 2"""
        return 2 * self.g - 2

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {"q": self.q, "g": self.g, "P": list(self.coefficients), "h": self.class_number}

    def __repr__(self) -> str:
        return f"ZetaData(q={self.q}, g={self.g}, P={list(self.coefficients)})"
