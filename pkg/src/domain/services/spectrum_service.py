# -*- coding: utf-8 -*-
"""SpectrumService - Möbius 역변환으로 닫힌 점 스펙트럼과 유효 인자 개수 계산"""

import logging
from math import comb
from typing import Dict, List, Mapping, Tuple

from sympy import divisors, factorint

from ..entities.point_count_table import PointCountTable
from ..exceptions import InconsistentCounts, NeedMoreCounts

logger = logging.getLogger(__name__)


def mobius(n: int) -> int:
    """뫼비우스 함수 μ(n)"""
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


class SpectrumService:
    """N_m → (a_l, b_n) 변환을 담당하는 도메인 서비스"""

    @staticmethod
    def closed_point_spectrum(counts: Mapping[int, int], curve_id: str = "") -> PointCountTable:
        """
        닫힌 점 스펙트럼과 유효 인자 개수

        l·a_l = Σ_{d|l} μ(l/d)·N_d,
        b_n = [t^n] Π_{l≤M} (1 - t^l)^{-a_l} (t^M에서 절단, 정확한 멱급수 곱)

        Args:
            counts: m ↦ N_m (1..M 전부 필요)
            curve_id: 곡선 해시

        Returns:
            PointCountTable

        Raises:
            NeedMoreCounts: 1..M 중 빠진 m
            InconsistentCounts: a_l이 음수이거나 정수가 아님
        """
        if not counts:
            raise NeedMoreCounts("no point counts given")
        max_degree = max(counts)
        missing = [m for m in range(1, max_degree + 1) if m not in counts]
        if missing:
            raise NeedMoreCounts(f"counts missing for m = {missing}")

        closed_points = SpectrumService.mobius_invert(counts, max_degree)
        divisor_counts = SpectrumService.euler_product(closed_points, max_degree)
        logger.debug(f"spectrum a={closed_points} b={divisor_counts}")
        return PointCountTable(
            curve_id=curve_id,
            counts=PointCountTable.counts_from_mapping({m: counts[m] for m in range(1, max_degree + 1)}),
            closed_points=tuple(closed_points),
            divisor_counts=tuple(divisor_counts),
        )

    @staticmethod
    def mobius_invert(counts: Mapping[int, int], max_degree: int) -> List[int]:
        """a_1..a_M (Möbius 역변환)"""
        result = []
        for l in range(1, max_degree + 1):
            total = sum(mobius(l // d) * counts[d] for d in divisors(l))
            if total % l != 0:
                raise InconsistentCounts(f"l*a_l = {total} is not divisible by l = {l}")
            a_l = total // l
            if a_l < 0:
                raise InconsistentCounts(f"a_{l} = {a_l} is negative")
            result.append(a_l)
        return result

    @staticmethod
    def euler_product(closed_points: List[int], max_degree: int) -> List[int]:
        """[t^n] Π_l (1 - t^l)^{-a_l}, n = 0..M"""
        series = [1] + [0] * max_degree
        for l, a_l in enumerate(closed_points, start=1):
            if a_l == 0:
                continue
            # (1 - t^l)^{-a} = Σ_j C(a + j - 1, j) t^{lj}
            factor = [0] * (max_degree + 1)
            for j in range(max_degree // l + 1):
                factor[l * j] = comb(a_l + j - 1, j)
            series = [
                sum(series[i] * factor[n - i] for i in range(n + 1))
                for n in range(max_degree + 1)
            ]
        return series

    @staticmethod
    def rebuild_counts(closed_points: List[int]) -> Dict[int, int]:
        """N_m = Σ_{l|m} l·a_l (Möbius 왕복 검사용)"""
        max_degree = len(closed_points)
        return {
            m: sum(l * closed_points[l - 1] for l in divisors(m))
            for m in range(1, max_degree + 1)
        }

    @staticmethod
    def split_counts(counts: Mapping[int, int], upto: int) -> Tuple[Dict[int, int], Dict[int, int]]:
        """(m ≤ upto, m > upto) 로 분리"""
        inside = {m: n for m, n in counts.items() if m <= upto}
        outside = {m: n for m, n in counts.items() if m > upto}
        return inside, outside
