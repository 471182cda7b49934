# -*- coding: utf-8 -*-
"""PointCountService - 캐시를 사용하는 점 개수 계산"""

import logging
from typing import Dict, Optional

import config
from ..interfaces.service_interface import IPointCountService
from ...domain.entities.curve_model import CurveModel
from ...domain.exceptions import InvalidArgument
from ...domain.interfaces.repository_interface import ICountCacheRepository
from ...domain.services.point_counting_service import PointCountingService

# 로깅 설정
logger = logging.getLogger(__name__)


class PointCountService(IPointCountService):
    """N_m 조회를 처리하는 애플리케이션 서비스

    캐시에 있는 N_m은 그대로 사용하고 빠진 차수만 전수 계산한 뒤 캐시에 기록합니다.

    Attributes:
        repository: 점 개수 캐시 (None이면 캐시 없이 계산)
        workers: 병렬 계산 프로세스 수
        last_stats: 마지막 조회의 {"cached", "computed"} 통계
    """

    def __init__(self, repository: Optional[ICountCacheRepository] = None, workers: Optional[int] = None):
        """PointCountService 초기화

        Args:
            repository: 점 개수 캐시 리포지토리 구현체
            workers: 병렬 프로세스 수 (None이면 config.COUNT_WORKERS)
        """
        self.repository = repository
        self.workers = workers or config.COUNT_WORKERS
        if self.workers < 1:
            raise InvalidArgument(f"workers must be >= 1, got {self.workers}")
        self.last_stats: Dict[str, int] = {"cached": 0, "computed": 0}

    def get_counts(self, curve: CurveModel, max_degree: int) -> Dict[int, int]:
        if max_degree < 1:
            raise InvalidArgument(f"max degree must be >= 1, got {max_degree}")

        cached: Dict[int, int] = {}
        if self.repository is not None and curve.curve_id:
            cached = self.repository.load(curve.curve_id)

        counts: Dict[int, int] = {}
        computed: Dict[int, int] = {}
        for m in range(1, max_degree + 1):
            if m in cached:
                counts[m] = cached[m]
                continue
            logger.info(f"[PointCountService] N_{m} 계산: curve={curve.curve_id}, q^m={curve.q ** m}")
            computed[m] = PointCountingService.count_points(curve, m, workers=self.workers)
            counts[m] = computed[m]

        if computed and self.repository is not None and curve.curve_id:
            self.repository.save(curve.curve_id, computed)

        self.last_stats = {"cached": len(counts) - len(computed), "computed": len(computed)}
        logger.info(
            f"[PointCountService] 점 개수 준비 완료: curve={curve.curve_id}, "
            f"cached={self.last_stats['cached']}, computed={self.last_stats['computed']}"
        )
        return counts
