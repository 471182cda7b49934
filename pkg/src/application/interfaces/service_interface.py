# -*- coding: utf-8 -*-
"""
애플리케이션 서비스 인터페이스

점 개수 조회 추상화
"""
from abc import ABC, abstractmethod
from typing import Dict

# 순환 참조 방지를 위한 TYPE_CHECKING
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ...domain.entities.curve_model import CurveModel


class IPointCountService(ABC):
    """점 개수 서비스 인터페이스"""

    @abstractmethod
    def get_counts(self, curve: 'CurveModel', max_degree: int) -> Dict[int, int]:
        """
        N_1..N_M 조회 (캐시 우선, 없는 항목만 계산)

        Args:
            curve: 곡선 모델
            max_degree: 최대 확대 차수 M

        Returns:
            m ↦ N_m (1 ≤ m ≤ M)
        """
        pass
