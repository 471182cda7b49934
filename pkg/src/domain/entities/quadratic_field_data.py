# -*- coding: utf-8 -*-
"""QuadraticFieldData / CompletedZetaTerm 엔티티 - 허수 이차체와 완비 제타의 감마 인자"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

import mpmath


@dataclass(frozen=True)
class QuadraticFieldData:
    """K = ℚ(√-D) 의 산술 데이터

    Attributes:
        D: -D가 기본 판별식인 양의 정수 (D ≥ 3)
        h: 유수 (축소 형식 개수)
        w: 단위 개수 (D=3: 6, D=4: 4, 그 외 2)
        forms: 축소 이차 형식 (a, b, c) 목록
        ideal_counts: a(1)..a(n_max)
    """

    D: int
    h: int
    w: int
    forms: Tuple[Tuple[int, int, int], ...]
    ideal_counts: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.D < 3:
            raise ValueError(f"D must be >= 3, got {self.D}")
        if self.h < 1:
            raise ValueError(f"class number must be >= 1, got {self.h}")
        if self.ideal_counts:
            if self.ideal_counts[0] != 1:
                raise ValueError("a(1) must be 1")
            if any(a < 0 for a in self.ideal_counts):
                raise ValueError("ideal counts must be non-negative")

    @staticmethod
    def unit_count(D: int) -> int:
        return {3: 6, 4: 4}.get(D, 2)

    def a(self, n: int) -> int:
        return self.ideal_counts[n - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "D": self.D,
            "h": self.h,
            "w": self.w,
            "forms": [list(form) for form in self.forms],
            "a": list(self.ideal_counts),
        }


@dataclass(frozen=True)
class CompletedZetaTerm:
    """완비 제타의 아르키메데스 감마 인자

    G₁(s) = π^{-s/2}Γ(s/2) (실 자리), G₂(s) = (2π)^{1-s}Γ(s) (복소 자리)

    Attributes:
        kind: "real" | "complex"
        truncation: 급수 절단 N
    """

    kind: str
    truncation: int

    def __post_init__(self):
        if self.kind not in ("real", "complex"):
            raise ValueError(f"unknown gamma factor kind {self.kind!r}")
        if self.truncation < 1:
            raise ValueError(f"truncation must be >= 1, got {self.truncation}")

    def factor(self, s) -> complex:
        if self.kind == "real":
            return complex(mpmath.power(mpmath.pi, -s / 2) * mpmath.gamma(s / 2))
        return complex(mpmath.power(2 * mpmath.pi, 1 - s) * mpmath.gamma(s))

    def to_dict(self) -> Dict[str, Any]:
        description = "pi^(-s/2) Gamma(s/2)" if self.kind == "real" else "(2 pi)^(1-s) Gamma(s)"
        return {"kind": self.kind, "gamma_factor": description, "truncation": self.truncation}
