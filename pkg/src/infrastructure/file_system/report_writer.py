# -*- coding: utf-8 -*-
"""ReportWriter - 보고서 JSON 원자적 저장 및 스키마 검증"""

import json
import logging
import shutil
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import jsonschema

import config

# 로깅 설정
logger = logging.getLogger(__name__)


class ReportWriter:
    """보고서를 UTF-8 JSON (키 정렬)으로 출력하는 서비스

    경로가 주어지면 임시 파일에 쓴 뒤 원본으로 교체하고,
    경로가 없으면 표준 출력에 씁니다.
    """

    def __init__(self, schema_path: Optional[Path] = None, stream: Optional[TextIO] = None):
        """ReportWriter 초기화

        Args:
            schema_path: 보고서 JSON 스키마 (None이면 번들 스키마)
            stream: 경로가 없을 때 사용할 출력 스트림 (None이면 sys.stdout)
        """
        self.schema_path = Path(schema_path) if schema_path else config.get_resource_path(config.REPORT_SCHEMA_FILE)
        self._stream = stream
        self._schema: Optional[Dict[str, Any]] = None

    @staticmethod
    def dumps(data: Dict[str, Any]) -> str:
        return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    def schema(self) -> Optional[Dict[str, Any]]:
        """스키마 로드 (없으면 None)"""
        if self._schema is None and self.schema_path.exists():
            with open(self.schema_path, 'r', encoding='utf-8') as f:
                self._schema = json.load(f)
        return self._schema

    def validation_errors(self, data: Dict[str, Any]) -> List[str]:
        """
        스키마 위반 목록

        Returns:
            List[str]: 위반 메시지 (위반 없음 또는 스키마 없음이면 빈 리스트)
        """
        schema = self.schema()
        if schema is None:
            logger.warning(f"Report schema not found: {self.schema_path}")
            return []
        validator = jsonschema.Draft7Validator(schema)
        return [f"{'/'.join(str(p) for p in e.path)}: {e.message}" for e in validator.iter_errors(data)]

    def write(self, data: Dict[str, Any], path: Optional[Path] = None) -> None:
        """보고서를 저장합니다.

        Args:
            data: JSON 직렬화 가능한 보고서 (Report.to_dict() 또는 오류 객체)
            path: 출력 경로 (None이면 스트림)
        """
        if "error" not in data:
            for error in self.validation_errors(data):
                logger.error(f"Report does not match schema: {error}")

        text = self.dumps(data)
        if path is None:
            stream = self._stream or sys.stdout
            stream.write(text)
            stream.flush()
            return

        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(
            mode='w',
            encoding='utf-8',
            delete=False,
            dir=path.parent,
            prefix='.tmp_',
            suffix='.json'
        ) as tmp_file:
            tmp_file.write(text)
            tmp_path = Path(tmp_file.name)

        try:
            shutil.move(str(tmp_path), str(path))
            logger.info(f"Report written: {path}")
        except Exception as e:
            if tmp_path.exists():
                tmp_path.unlink()
            logger.error(f"Failed to write report {path}: {e}")
            raise
