# -*- coding: utf-8 -*-
"""ResidueValue Value Object - c / ln q 형태의 정확한 유수"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict


@dataclass(frozen=True)
class ResidueValue:
    """실수 c / ln q 를 유리수 c로 정확하게 보관

    표시할 때만 1/ln q 를 곱합니다.

    Attributes:
        coeff: 유리수 계수 c
        q: 로그의 밑
    """

    coeff: Fraction
    q: int

    def __post_init__(self):
        object.__setattr__(self, 'coeff', Fraction(self.coeff))
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")

    def display(self) -> float:
        """부동소수점 표시값 c / ln q"""
        return float(self.coeff) / math.log(self.q)

    def to_dict(self) -> Dict[str, Any]:
        return {"coeff": str(self.coeff), "display": self.display(), "log_base": self.q}

    def __repr__(self) -> str:
        return f"ResidueValue({self.coeff}/ln {self.q})"
