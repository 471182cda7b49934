# -*- coding: utf-8 -*-
"""Report / CheckResult 엔티티 - 검사 결과와 JSON 직렬화"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np


def to_json_value(value: Any) -> Any:
    """
    보고서 값을 JSON 호환 값으로 변환

    - Fraction → "p/q" 문자열 (정수면 int)
    - complex → {"re", "im"}
    - to_dict()를 가진 객체 (HalfPowerScalar, ResidueValue 등) → to_dict()
    - numpy 스칼라 → 파이썬 스칼라, 튜플 → 리스트

    Examples:
        >>> to_json_value(Fraction(3, 2))
        '3/2'
        >>> to_json_value(1 + 2j)
        {'re': 1.0, 'im': 2.0}
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return value
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(value.real), "im": float(value.imag)}
    if hasattr(value, "to_dict"):
        return to_json_value(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_json_value(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_json_value(v) for v in value.tolist()]
    return str(value)


@dataclass
class CheckResult:
    """검사 한 건

    모든 검사는 항등식의 양변(lhs, rhs)을 함께 기록합니다.

    Attributes:
        name: 검사 이름 (예: "zeta.functional_equation")
        ok: 통과 여부
        lhs: 좌변
        rhs: 우변
        tolerance: 수치 허용 오차 (정확 검사는 None)
        note: 부연 설명
        details: 추가 진단 데이터
    """

    name: str
    ok: bool
    lhs: Any = None
    rhs: Any = None
    tolerance: Optional[float] = None
    note: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name:
            raise ValueError("check name cannot be empty")
        self.ok = bool(self.ok)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "ok": self.ok,
            "lhs": to_json_value(self.lhs),
            "rhs": to_json_value(self.rhs),
            "tolerance": self.tolerance,
        }
        if self.note:
            data["note"] = self.note
        if self.details:
            data["details"] = to_json_value(self.details)
        return data


@dataclass
class Report:
    """분석 / 검증 보고서

    Attributes:
        tool_version: ZetaLab 버전
        command: "analyze" | "verify" | "nf"
        subject: 곡선 또는 수체 식별자
        sections: 섹션 이름 → 내용 (counts, zeta, ...)
        checks: 검사 목록
        timings: 단계 이름 → 초
        cache: 점 개수 캐시 통계 {"cached", "computed"} (실행마다 달라질 수 있음)
    """

    tool_version: str
    command: str
    subject: Dict[str, Any]
    sections: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    cache: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def add_check(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def add_section(self, name: str, content: Any) -> None:
        self.sections[name] = content

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "subject": to_json_value(self.subject),
            "sections": to_json_value(self.sections),
            "checks": [check.to_dict() for check in self.checks],
            "ok": self.ok,
            "timings": {
                "stages": {k: round(float(v), 6) for k, v in self.timings.items()},
                "cache": {k: int(v) for k, v in self.cache.items()},
            },
        }

    def __repr__(self) -> str:
        return f"Report({self.command}, checks={len(self.checks)}, ok={self.ok})"
