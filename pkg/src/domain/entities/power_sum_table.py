# -*- coding: utf-8 -*-
"""PowerSumTable 엔티티 - 프로베니우스 고유값의 거듭제곱 합"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple


@dataclass(frozen=True)
class PowerSumTable:
    """s_n = Σ_j λ_j^n, s_{-n} = Σ_j λ_j^{-n} (0 ≤ n ≤ n_max, 정확한 유리수)

    Attributes:
        q: 계수체 크기
        coefficients: P의 계수
        positive: s_0, s_1, ..., s_{n_max}
        negative: s_0, s_{-1}, ..., s_{-n_max}
    """

    q: int
    coefficients: Tuple[int, ...]
    positive: Tuple[Fraction, ...]
    negative: Tuple[Fraction, ...]

    @property
    def n_max(self) -> int:
        return len(self.positive) - 1

    def s(self, n: int) -> Fraction:
        """s_n (n은 음수 가능)

        Raises:
            IndexError: |n| > n_max
        """
        if abs(n) > self.n_max:
            raise IndexError(f"power sum s_{n} outside table (n_max={self.n_max})")
        return self.positive[n] if n >= 0 else self.negative[-n]
