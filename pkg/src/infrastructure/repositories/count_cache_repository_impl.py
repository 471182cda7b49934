# -*- coding: utf-8 -*-
"""CountCacheRepositoryImpl - 텍스트 파일 기반 점 개수 캐시 구현"""

import logging
import shutil
import tempfile
from pathlib import Path
from threading import RLock
from typing import Dict, Mapping

from ...domain.interfaces.repository_interface import ICountCacheRepository

# 로깅 설정
logger = logging.getLogger(__name__)


class CountCacheRepositoryImpl(ICountCacheRepository):
    """`<cache_dir>/<curve_id>.counts` 파일 기반 점 개수 캐시

    한 줄에 `m<TAB>N_m` 레코드 하나를 기록합니다.
    손상된 줄은 경고 후 무시합니다 (캐시는 부분 캐시로 취급).
    """

    SUFFIX = ".counts"

    def __init__(self, cache_dir: Path):
        """CountCacheRepositoryImpl 초기화

        Args:
            cache_dir: 캐시 디렉토리 (없으면 첫 저장 시 생성)
        """
        self.cache_dir = Path(cache_dir)
        self._lock = RLock()  # 재진입 가능한 Lock (병렬 점 계산과 함께 사용)

    def path_for(self, curve_id: str) -> Path:
        if not curve_id:
            raise ValueError("curve_id cannot be empty")
        return self.cache_dir / f"{curve_id}{self.SUFFIX}"

    def load(self, curve_id: str) -> Dict[int, int]:
        """캐시 파일을 읽어 m ↦ N_m 을 반환합니다.

        Args:
            curve_id: 곡선 해시

        Returns:
            Dict[int, int]: 캐시된 점 개수 (파일이 없으면 빈 딕셔너리)
        """
        path = self.path_for(curve_id)
        with self._lock:
            if not path.exists():
                logger.debug(f"Cache miss: {path}")
                return {}

            counts: Dict[int, int] = {}
            with open(path, 'r', encoding='utf-8') as f:
                for line_no, line in enumerate(f, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    parts = line.split('\t')
                    try:
                        if len(parts) != 2:
                            raise ValueError(f"expected 2 fields, got {len(parts)}")
                        m, n = int(parts[0]), int(parts[1])
                        if m < 1 or n < 0:
                            raise ValueError(f"out of range record m={m}, N={n}")
                    except ValueError as e:
                        logger.warning(f"Ignoring corrupt cache line {path.name}:{line_no}: {e}")
                        continue
                    counts[m] = n

            logger.debug(f"Loaded {len(counts)} cached counts from {path}")
            return counts

    def save(self, curve_id: str, counts: Mapping[int, int]) -> None:
        """기존 캐시와 병합하여 원자적으로 저장합니다.

        Args:
            curve_id: 곡선 해시
            counts: m ↦ N_m
        """
        with self._lock:
            merged = self.load(curve_id)
            merged.update({int(m): int(n) for m, n in counts.items()})
            self._atomic_save(self.path_for(curve_id), merged)
            logger.info(f"Saved {len(merged)} counts for curve {curve_id}")

    def _atomic_save(self, path: Path, counts: Mapping[int, int]) -> None:
        """원자적으로 캐시를 저장합니다 (임시 파일 → 원본 교체).

        Args:
            path: 대상 파일
            counts: 저장할 점 개수
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        with tempfile.NamedTemporaryFile(
            mode='w',
            encoding='utf-8',
            delete=False,
            dir=path.parent,
            prefix='.tmp_',
            suffix=self.SUFFIX
        ) as tmp_file:
            for m in sorted(counts):
                tmp_file.write(f"{m}\t{counts[m]}\n")
            tmp_path = Path(tmp_file.name)

        try:
            shutil.move(str(tmp_path), str(path))
        except Exception as e:
            # 실패 시 임시 파일 삭제
            if tmp_path.exists():
                tmp_path.unlink()
            logger.error(f"Failed to save cache {path}: {e}")
            raise
