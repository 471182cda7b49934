# -*- coding: utf-8 -*-
"""
Report 직렬화 / ReportWriter 테스트

테스트 범위:
1. to_json_value 변환 규칙
2. Report.to_dict 구조와 스키마 검증
3. 파일 / 스트림 출력 (키 정렬, 원자적 저장)
"""
import io
import json
from fractions import Fraction

import pytest

from src.domain.entities.report import CheckResult, Report, to_json_value
from src.domain.value_objects.half_power_scalar import HalfPowerScalar
from src.infrastructure.file_system.report_writer import ReportWriter


@pytest.fixture
def report():
    """검사 두 건을 가진 보고서"""
    report = Report("1.0.0", "nf", {"D": 23}, cache={"cached": 1, "computed": 2})
    report.add_section("field", {"h": 3, "value": Fraction(3, 2)})
    report.add_check(CheckResult("nf.exact", True, lhs=Fraction(9, 4), rhs=Fraction(9, 4)))
    report.add_check(CheckResult("nf.numeric", False, lhs=1.0, rhs=1 + 1e-3, tolerance=1e-9, note="drift"))
    report.timings = {"total": 0.25}
    return report


class TestJsonValue:
    """to_json_value 테스트"""

    def test_fraction(self):
        assert to_json_value(Fraction(3, 2)) == "3/2"
        assert to_json_value(Fraction(4, 2)) == 2

    def test_complex(self):
        assert to_json_value(1 + 2j) == {"re": 1.0, "im": 2.0}

    def test_objects_with_to_dict(self):
        """HalfPowerScalar 등은 to_dict 사용"""
        assert to_json_value(HalfPowerScalar(0, Fraction(1, 4), 2)) == \
            to_json_value(HalfPowerScalar(0, Fraction(1, 4), 2).to_dict())

    def test_nested(self):
        assert to_json_value({1: (Fraction(1, 3), None)}) == {"1": ["1/3", None]}

    def test_non_finite_float(self):
        assert to_json_value(float("inf")) == "inf"


class TestReport:
    """Report 테스트"""

    def test_ok_and_failed_checks(self, report):
        assert not report.ok
        assert [check.name for check in report.failed_checks] == ["nf.numeric"]

    def test_to_dict_matches_schema(self, report):
        """보고서는 번들 스키마를 만족"""
        # When
        data = report.to_dict()

        # Then
        assert ReportWriter().validation_errors(data) == []
        assert data["timings"] == {"stages": {"total": 0.25}, "cache": {"cached": 1, "computed": 2}}
        assert data["checks"][0]["lhs"] == "9/4"
        assert data["checks"][1]["note"] == "drift"

    def test_schema_violation_reported(self, report):
        """필수 키가 빠지면 위반 목록이 비어 있지 않음"""
        # Given
        data = report.to_dict()
        del data["checks"]

        # Then
        assert ReportWriter().validation_errors(data) != []

    def test_empty_check_name_rejected(self):
        with pytest.raises(ValueError):
            CheckResult("", True)


class TestReportWriter:
    """ReportWriter 테스트"""

    def test_stream_output_is_sorted_json(self, report):
        # Given
        stream = io.StringIO()
        writer = ReportWriter(stream=stream)

        # When
        writer.write(report.to_dict())

        # Then
        data = json.loads(stream.getvalue())
        assert data["command"] == "nf"
        assert list(data) == sorted(data)
        assert list(data["checks"][0]) == sorted(data["checks"][0])

    def test_file_output_is_atomic(self, report, tmp_path):
        """파일 출력 후 임시 파일이 남지 않음"""
        # Given
        path = tmp_path / "out" / "report.json"

        # When
        ReportWriter().write(report.to_dict(), path)

        # Then
        assert json.loads(path.read_text(encoding="utf-8"))["subject"] == {"D": 23}
        assert [p.name for p in path.parent.iterdir()] == ["report.json"]

    def test_error_object_written(self, tmp_path):
        """오류 객체는 스키마 검증 없이 기록"""
        # Given
        path = tmp_path / "error.json"

        # When
        ReportWriter().write({"error": {"type": "ParseError", "message": "bad"}}, path)

        # Then
        assert json.loads(path.read_text(encoding="utf-8"))["error"]["type"] == "ParseError"
