# -*- coding: utf-8 -*-
"""CurveConfigRepository - 곡선 설정 파일 로드"""

import logging
from pathlib import Path

from ...domain.entities.curve_model import CurveModel
from ...domain.exceptions import ParseError
from ...domain.services.curve_parser_service import CurveParserService

logger = logging.getLogger(__name__)


class CurveConfigRepository:
    """디스크의 곡선 설정(TOML) 문서를 CurveModel로 읽는 Repository

    Examples:
        >>> repo = CurveConfigRepository()
        >>> curve = repo.load(Path("curves/elliptic_f2.toml"))
        >>> curve.genus
        1
    """

    def read_text(self, path: Path) -> str:
        """설정 문서 원문을 읽습니다.

        Raises:
            ParseError: 파일이 없거나 읽을 수 없는 경우
        """
        path = Path(path)
        if not path.is_file():
            logger.error(f"Curve config not found: {path}")
            raise ParseError(f"curve config not found: {path}")
        try:
            return path.read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"Failed to read curve config {path}: {e}")
            raise ParseError(f"cannot read curve config {path}: {e}") from e

    def load(self, path: Path) -> CurveModel:
        """설정 파일을 파싱하여 CurveModel을 반환합니다.

        Args:
            path: 설정 파일 경로

        Returns:
            CurveModel: 검증된 곡선 모델

        Raises:
            ParseError / InvalidCurve: 문서 또는 모델 오류
        """
        text = self.read_text(path)
        curve = CurveParserService.parse_curve(text)
        logger.info(f"Loaded curve config {path} -> {curve.curve_id}")
        return curve
