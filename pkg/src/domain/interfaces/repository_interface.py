# -*- coding: utf-8 -*-
"""
리포지토리 인터페이스

점 개수 캐시 영속성 추상화
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, Mapping


class ICountCacheRepository(ABC):
    """점 개수 캐시 리포지토리 인터페이스

    곡선 해시(curve_id)마다 m ↦ N_m 기록을 보관합니다.
    """

    @abstractmethod
    def load(self, curve_id: str) -> Dict[int, int]:
        """
        캐시된 점 개수 조회

        Args:
            curve_id: 곡선 해시

        Returns:
            m ↦ N_m (캐시가 없으면 빈 딕셔너리)
        """
        pass

    @abstractmethod
    def save(self, curve_id: str, counts: Mapping[int, int]) -> None:
        """
        점 개수 저장 (기존 기록과 병합)

        Args:
            curve_id: 곡선 해시
            counts: m ↦ N_m
        """
        pass

    @abstractmethod
    def path_for(self, curve_id: str) -> Path:
        """
        캐시 파일 경로

        Args:
            curve_id: 곡선 해시

        Returns:
            <cache_dir>/<curve_id>.counts
        """
        pass
