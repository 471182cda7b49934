# -*- coding: utf-8 -*-
"""
CLI 종단 테스트 (main.main)

ReportWriter에 StringIO를 주입해 표준 출력 대신 스트림으로 보고서를 받습니다.
"""
import argparse
import io
import json
import math
from pathlib import Path
from unittest.mock import Mock

import pytest

import main
from src.application.use_cases.analyze_curve import AnalyzeCurveUseCase
from src.core.container import Container, ServiceNames
from src.domain.exceptions import InvalidArgument, TooLarge
from src.infrastructure.file_system.report_writer import ReportWriter
from src.presentation.cli.commands import build_parser, parse_complex, run_number_field

CURVES_DIR = Path(__file__).resolve().parent.parent / "curves"


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """환경 변수 캐시 경로를 제거하고 테스트 후 컨테이너를 비움"""
    monkeypatch.delenv("ZETALAB_CACHE", raising=False)
    yield
    Container.clear()


def curve_path(name):
    return CURVES_DIR / f"{name}.toml"


def run_cli(argv):
    stream = io.StringIO()
    code = main.main(argv, writer=ReportWriter(stream=stream))
    text = stream.getvalue()
    return code, (json.loads(text) if text else None)


def without_timings(data):
    return {key: value for key, value in data.items() if key != "timings"}


class TestParser:
    """인자 파서"""

    def test_parse_complex_variants(self):
        assert parse_complex("2") == 2
        assert isinstance(parse_complex("2"), int)
        assert parse_complex("0.5") == 0.5
        assert parse_complex("0.5+14j") == complex(0.5, 14)

    def test_parse_complex_rejects_text(self):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_complex("abc")

    def test_nf_targets_are_exclusive(self):
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["nf", "--disc", "23", "--riemann", "2"])
        assert exc_info.value.code == 2

    def test_missing_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as exc_info:
            main.main([])
        assert exc_info.value.code == 2

    def test_nf_handler_default(self):
        args = build_parser().parse_args(["nf", "--disc", "23"])
        assert args.handler is run_number_field
        assert args.trunc is None


class TestAnalyzeCommand:
    """analyze"""

    def test_elliptic_curve_report(self, tmp_path):
        """
        Given: y² + y = x³ + x 위 F2 (N1=3, N2=9)
        When: analyze --max-degree 5
        Then: P(t) = 1 + 2t², h = 3, 모든 검사 통과, 스키마 유효
        """
        code, data = run_cli(["analyze", "--curve", str(curve_path("elliptic_f2")),
                              "--max-degree", "5", "--cache", str(tmp_path)])

        assert code == 0
        assert data["ok"] is True
        assert data["command"] == "analyze"
        assert data["sections"]["zeta"]["P"] == [1, 0, 2]
        assert data["sections"]["zeta"]["h"] == 3
        assert data["timings"]["cache"] == {"cached": 0, "computed": 5}
        assert ReportWriter().validation_errors(data) == []

    def test_cache_round_trip(self, tmp_path):
        """
        Given: 같은 캐시 디렉토리
        When: 두 번 실행
        Then: 두 번째는 모두 캐시에서 읽고 보고서 내용은 같음
        """
        argv = ["analyze", "--curve", str(curve_path("elliptic_f2")),
                "--max-degree", "5", "--cache", str(tmp_path)]

        first_code, first = run_cli(argv)
        second_code, second = run_cli(argv)

        assert first_code == second_code == 0
        assert second["timings"]["cache"] == {"cached": 5, "computed": 0}
        assert without_timings(first) == without_timings(second)

    def test_env_cache_has_priority(self, tmp_path, monkeypatch):
        env_dir = tmp_path / "env"
        flag_dir = tmp_path / "flag"
        monkeypatch.setenv("ZETALAB_CACHE", str(env_dir))

        code, _ = run_cli(["analyze", "--curve", str(curve_path("p1_f2")), "--cache", str(flag_dir)])

        assert code == 0
        assert env_dir.exists()
        assert not flag_dir.exists()

    def test_max_degree_below_minimum(self, tmp_path):
        code, data = run_cli(["analyze", "--curve", str(curve_path("elliptic_f2")),
                              "--max-degree", "3", "--cache", str(tmp_path)])

        assert code == 2
        assert data["error"]["type"] == "InvalidArgument"

    def test_missing_curve_file(self, tmp_path):
        code, data = run_cli(["analyze", "--curve", str(tmp_path / "nope.toml"), "--cache", str(tmp_path)])

        assert code == 2
        assert data["error"]["type"] == "ParseError"

    def test_out_writes_file(self, tmp_path):
        target = tmp_path / "reports" / "p1.json"
        stream = io.StringIO()

        code = main.main(["analyze", "--curve", str(curve_path("p1_f3")), "--cache", str(tmp_path),
                          "--out", str(target)], writer=ReportWriter(stream=stream))

        assert code == 0
        assert stream.getvalue() == ""
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["sections"]["zeta"]["P"] == [1]

    def test_container_is_wired(self, tmp_path):
        run_cli(["analyze", "--curve", str(curve_path("p1_f2")), "--cache", str(tmp_path)])

        for name in (ServiceNames.COUNT_CACHE_REPOSITORY, ServiceNames.CURVE_CONFIG_REPOSITORY,
                     ServiceNames.REPORT_WRITER, ServiceNames.POINT_COUNT_SERVICE,
                     ServiceNames.ANALYZE_CURVE_USE_CASE, ServiceNames.VERIFY_SUITE_USE_CASE,
                     ServiceNames.NUMBER_FIELD_USE_CASE):
            assert Container.has(name)


class TestVerifyCommand:
    """verify"""

    def test_unknown_suite(self, tmp_path):
        code, data = run_cli(["verify", "--curve", str(curve_path("p1_f2")),
                              "--suite", "bogus", "--cache", str(tmp_path)])

        assert code == 2
        assert data["error"]["type"] == "InvalidArgument"

    def test_poisson_grid(self, tmp_path):
        """
        Given: 타원곡선 F2
        When: verify --suite poisson
        Then: 차수 -5..5 × 이동 -3..3 = 77개 검사 모두 통과
        """
        code, data = run_cli(["verify", "--curve", str(curve_path("elliptic_f2")),
                              "--suite", "poisson", "--cache", str(tmp_path)])

        assert code == 0
        assert len(data["checks"]) == 77
        assert all(check["name"].startswith("poisson.") for check in data["checks"])

    def test_explicit_suite_is_seeded(self, tmp_path):
        """
        Given: 같은 시드
        When: explicit 스위트를 두 번 실행
        Then: 20개 무작위 검사 + 거듭제곱 합 쌍 검사, 결과 동일
        """
        argv = ["verify", "--curve", str(curve_path("elliptic_f3")),
                "--suite", "explicit", "--seed", "1", "--cache", str(tmp_path)]

        first_code, first = run_cli(argv)
        _, second = run_cli(argv)

        assert first_code == 0
        assert len(first["checks"]) == 21
        assert first["sections"]["suite"] == {"name": "explicit", "seed": 1}
        assert first["checks"] == second["checks"]

    @pytest.mark.parametrize("suite,count", [
        ("diagram", 37),
        ("tate-iwasawa", 4),
        ("fourier", 33),
        ("residues", 5),
        ("all", 193),
    ])
    def test_suite_counts_are_seeded(self, tmp_path, suite, count):
        """
        Given: 타원곡선 F2, 시드 3
        When: 같은 스위트를 두 번 실행
        Then: 종료 코드 0, 검사 개수 고정, 두 결과의 검사 목록 동일
        """
        argv = ["verify", "--curve", str(curve_path("elliptic_f2")),
                "--suite", suite, "--seed", "3", "--cache", str(tmp_path)]

        first_code, first = run_cli(argv)
        second_code, second = run_cli(argv)

        assert first_code == second_code == 0
        assert first["ok"] is True
        assert len(first["checks"]) == count
        assert first["checks"] == second["checks"]


F7_CURVE = """\
[curve]
name = "y^2 = x^3 + x + 1 over F_7"
model = "elliptic"
p = 7
k = 1
f = [1, 1, 0, 1]
"""


class TestDegreeResolution:
    """최대 차수 M 결정 (필드 상한 반영)"""

    @pytest.mark.parametrize("q,genus,expected", [
        (2, 1, 8),
        (5, 2, 8),
        (7, 1, 7),
        (11, 1, 5),
    ])
    def test_default_is_capped(self, q, genus, expected):
        """기본 M = max(8, 2g+3)을 q^M ≤ 2²⁰ 안으로 줄임"""
        curve = Mock(q=q, genus=genus)
        assert AnalyzeCurveUseCase.resolve_max_degree(curve) == expected

    def test_minimum_does_not_fit(self):
        """2g+3 자체가 상한을 넘으면 TooLarge"""
        with pytest.raises(TooLarge):
            AnalyzeCurveUseCase.resolve_max_degree(Mock(q=1024, genus=1))

    def test_explicit_degree_over_cap(self):
        with pytest.raises(TooLarge) as exc_info:
            AnalyzeCurveUseCase.resolve_max_degree(Mock(q=7, genus=1), 9)
        assert "--max-degree <= 7" in str(exc_info.value)

    def test_explicit_degree_below_minimum(self):
        with pytest.raises(InvalidArgument):
            AnalyzeCurveUseCase.resolve_max_degree(Mock(q=7, genus=1), 3)

    def test_largest_affordable_degree(self):
        assert AnalyzeCurveUseCase.largest_affordable_degree(2) == 20
        assert AnalyzeCurveUseCase.largest_affordable_degree(7) == 7

    def test_analyze_over_f7_with_default_degree(self, tmp_path):
        """
        Given: y² = x³ + x + 1 위 F7 (N1 = 5)
        When: --max-degree 없이 analyze
        Then: M = 7로 줄어 실행되고 P(t) = 1 - 3t + 7t²
        """
        path = tmp_path / "elliptic_f7.toml"
        path.write_text(F7_CURVE, encoding="utf-8")

        code, data = run_cli(["analyze", "--curve", str(path), "--cache", str(tmp_path / "cache")])

        assert code == 0
        assert data["sections"]["zeta"]["P"] == [1, -3, 7]
        assert data["timings"]["cache"] == {"cached": 0, "computed": 7}

    def test_verify_accepts_max_degree(self, tmp_path):
        path = tmp_path / "elliptic_f7.toml"
        path.write_text(F7_CURVE, encoding="utf-8")

        code, data = run_cli(["verify", "--curve", str(path), "--suite", "poisson",
                              "--max-degree", "5", "--cache", str(tmp_path / "cache")])

        assert code == 0
        assert data["sections"]["zeta"]["P"] == [1, -3, 7]
        assert len(data["checks"]) == 77

    def test_verify_rejects_degree_over_cap(self, tmp_path):
        path = tmp_path / "elliptic_f7.toml"
        path.write_text(F7_CURVE, encoding="utf-8")

        code, data = run_cli(["verify", "--curve", str(path), "--suite", "poisson",
                              "--max-degree", "8", "--cache", str(tmp_path / "cache")])

        assert code == 2
        assert data["error"]["type"] == "TooLarge"


class TestNumberFieldCommand:
    """nf"""

    def test_discriminant_23(self):
        code, data = run_cli(["nf", "--disc", "23"])

        assert code == 0
        assert data["sections"]["field"]["h"] == 3
        assert data["subject"]["D"] == 23
        assert ReportWriter().validation_errors(data) == []

    def test_non_fundamental_discriminant(self):
        code, data = run_cli(["nf", "--disc", "12"])

        assert code == 2
        assert data["error"]["type"] == "InvalidDiscriminant"

    def test_riemann_anchor(self):
        code, data = run_cli(["nf", "--riemann", "2"])

        assert code == 0
        value = data["sections"]["xi"]["value"]
        assert value["re"] == pytest.approx(math.pi / 6, abs=1e-9)
        assert value["im"] == pytest.approx(0.0, abs=1e-12)

    def test_riemann_pole(self):
        code, data = run_cli(["nf", "--riemann", "1"])

        assert code == 2
        assert data["error"]["type"] == "PoleError"

    def test_bad_truncation(self):
        code, data = run_cli(["nf", "--disc", "23", "--trunc", "0"])

        assert code == 2
        assert data["error"]["type"] == "InvalidArgument"
