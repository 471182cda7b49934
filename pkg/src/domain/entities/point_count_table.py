# -*- coding: utf-8 -*-
"""PointCountTable 엔티티 - N_m, 닫힌 점 스펙트럼 a_l, 유효 인자 개수 b_n"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple

from ..exceptions import InconsistentCounts, InvalidArgument


@dataclass(frozen=True)
class PointCountTable:
    """점 개수 표

    Attributes:
        curve_id: 곡선 해시
        counts: m ↦ N_m (1 ≤ m ≤ M)
        closed_points: a_1..a_M (인덱스 0은 a_1)
        divisor_counts: b_0..b_M
    """

    curve_id: str
    counts: Tuple[Tuple[int, int], ...]
    closed_points: Tuple[int, ...]
    divisor_counts: Tuple[int, ...]

    def __post_init__(self):
        if any(n < 0 for _, n in self.counts):
            raise InvalidArgument("N_m must be non-negative")
        if any(a < 0 for a in self.closed_points):
            raise InconsistentCounts("a_l must be non-negative")
        if self.divisor_counts and self.divisor_counts[0] != 1:
            raise InconsistentCounts("b_0 must be 1")

    @property
    def max_degree(self) -> int:
        return len(self.closed_points)

    def count(self, m: int) -> int:
        return dict(self.counts)[m]

    def a(self, l: int) -> int:
        """차수 l인 닫힌 점의 개수 a_l (l ≥ 1)"""
        return self.closed_points[l - 1]

    def b(self, n: int) -> int:
        return self.divisor_counts[n]

    def counts_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    @staticmethod
    def counts_from_mapping(counts: Mapping[int, int]) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted((int(m), int(n)) for m, n in counts.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": {str(m): n for m, n in self.counts},
            "a": list(self.closed_points),
            "b": list(self.divisor_counts),
        }
