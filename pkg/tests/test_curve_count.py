# -*- coding: utf-8 -*-
"""
곡선 파싱 / 유리점 개수 / 닫힌 점 스펙트럼 테스트

테스트 범위:
1. 설정 문서 파싱과 오류 종류 (ParseError, InvalidCurve)
2. 예제 곡선의 N_m 기준값과 Hasse–Weil 한계
3. 병렬 점 계산과 단일 프로세스 결과의 일치
4. Möbius 역변환, 오일러 곱, 일관성 오류
"""
import pytest

import config
from src.domain.entities.point_count_table import PointCountTable
from src.domain.exceptions import InconsistentCounts, InvalidArgument, InvalidCurve, NeedMoreCounts, ParseError
from src.domain.services.curve_parser_service import CurveParserService
from src.domain.services.explicit_formula_service import ExplicitFormulaService
from src.domain.services.point_counting_service import PointCountingService
from src.domain.services.spectrum_service import SpectrumService, mobius
from src.domain.services.zeta_service import ZetaService


ELLIPTIC_F2 = """
[curve]
name = "{name}"
model = "elliptic"
p = 2
k = 1
h = [0, 1]
f = [0, 0, 0, 1]
"""

FERMAT_CUBIC_F2 = """
[curve]
name = "x^3 + y^3 + z^3 over F_2"
model = "plane"
p = 2
k = 1
monomials = [[3, 0, 0, 1], [0, 3, 0, 1], [0, 0, 3, 1]]
"""


class TestParseCurve:
    """parse_curve 테스트"""

    def test_elliptic_model(self, curves):
        """예제 타원곡선 파싱 결과"""
        # Given
        curve = curves["elliptic_f2"]

        # Then
        assert curve.kind == "elliptic"
        assert curve.genus == 1
        assert curve.q == 2
        assert len(curve.curve_id) == 16

    def test_projective_line_model(self, curves):
        assert curves["p1_f3"].is_projective_line()
        assert curves["p1_f3"].genus == 0

    def test_hyperelliptic_genus(self, curves):
        """deg f = 5 → 종수 2"""
        assert curves["genus2_f5"].genus == 2

    def test_curve_id_ignores_name(self):
        """곡선 해시는 이름과 무관"""
        # When
        first = CurveParserService.parse_curve(ELLIPTIC_F2.format(name="first"))
        second = CurveParserService.parse_curve(ELLIPTIC_F2.format(name="second"))

        # Then
        assert first.curve_id == second.curve_id
        assert first.to_dict()["name"] != second.to_dict()["name"]

    def test_plane_cubic_genus(self):
        """평면 3차 곡선의 종수 (d-1)(d-2)/2 = 1"""
        # When
        curve = CurveParserService.parse_curve(FERMAT_CUBIC_F2)

        # Then
        assert curve.kind == "plane"
        assert curve.degree == 3
        assert curve.genus == 1

    @pytest.mark.parametrize("text", [
        "[curve\nmodel = 'p1'",                                   # TOML 문법 오류
        "[other]\nmodel = 'p1'\np = 2\n",                          # [curve] 없음
        "[curve]\nmodel = 'conic'\np = 2\n",                       # 알 수 없는 모델
        "[curve]\nmodel = 'p1'\n",                                  # p 없음
        "[curve]\nmodel = 'elliptic'\np = 2\nh = [0, 1]\n",         # f 없음
    ])
    def test_malformed_document_raises_parse_error(self, text):
        with pytest.raises(ParseError):
            CurveParserService.parse_curve(text)

    def test_singular_elliptic_raises(self):
        """y² = x³ + x² 는 원점에서 특이"""
        # Given
        text = "[curve]\nmodel = 'elliptic'\np = 5\nf = [0, 0, 1, 1]\n"

        # When / Then
        with pytest.raises(InvalidCurve):
            CurveParserService.parse_curve(text)

    def test_elliptic_degree_violation_raises(self):
        """elliptic 모델은 deg f = 3"""
        with pytest.raises(InvalidCurve):
            CurveParserService.parse_curve("[curve]\nmodel = 'elliptic'\np = 5\nf = [1, 0, 1]\n")

    def test_odd_characteristic_hyperelliptic_with_h_raises(self):
        """홀수 표수 hyperelliptic 모델은 h = 0"""
        # Given
        text = "[curve]\nmodel = 'hyperelliptic'\np = 5\nf = [0, -1, 0, 0, 0, 1]\nh = [1]\n"

        # When / Then
        with pytest.raises(InvalidCurve):
            CurveParserService.parse_curve(text)


class TestCountPoints:
    """count_points 테스트"""

    def test_projective_line_counts(self, curve_counts):
        """N_m(ℙ¹/𝔽_2) = 2^m + 1"""
        for m, n in curve_counts["p1_f2"].items():
            assert n == 2 ** m + 1

    @pytest.mark.parametrize("name,expected", [
        ("elliptic_f2", {1: 3, 2: 9}),
        ("elliptic_f3", {1: 7}),
        ("genus2_f5", {1: 6}),
    ])
    def test_known_counts(self, curve_counts, name, expected):
        for m, n in expected.items():
            assert curve_counts[name][m] == n

    def test_hasse_weil_bound(self, curves, curve_counts):
        """|N_m - 1 - q^m| ≤ 2g·q^{m/2}"""
        for name, curve in curves.items():
            for m, n in curve_counts[name].items():
                qm = curve.q ** m
                assert abs(n - 1 - qm) <= 2 * curve.genus * qm ** 0.5 + 1e-9

    def test_plane_cubic_counts_follow_fitted_zeta(self):
        """평면 3차 곡선: N_1, N_2로 적합한 P(t)가 N_3..N_5를 예측"""
        # Given
        curve = CurveParserService.parse_curve(FERMAT_CUBIC_F2)
        counts = {m: PointCountingService.count_points(curve, m) for m in range(1, 6)}

        # When
        zeta = ZetaService.fit_numerator(curve.q, 1, {1: counts[1], 2: counts[2]})
        check = ExplicitFormulaService.lefschetz_check(zeta, {m: counts[m] for m in range(3, 6)})

        # Then
        assert counts[1] == 3
        assert check["ok"]

    def test_parallel_matches_serial(self, curves, monkeypatch):
        """청크를 여러 워커에 나눠도 N_m은 같음"""
        # Given: 청크를 작게 나눠 여러 작업을 만든다
        monkeypatch.setattr(config, "COUNT_CHUNK_SIZE", 8)
        curve = curves["elliptic_f3"]

        # When
        serial = PointCountingService.count_points(curve, 3, workers=1)
        parallel = PointCountingService.count_points(curve, 3, workers=2)

        # Then
        assert serial == parallel

    def test_invalid_degree_raises(self, curves):
        with pytest.raises(ValueError):
            PointCountingService.count_points(curves["p1_f2"], 0)


class TestSpectrum:
    """닫힌 점 스펙트럼 테스트"""

    def test_mobius_values(self):
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    def test_projective_line_closed_points(self, tables):
        """ℙ¹/𝔽_2: a_l = 기약 모닉 다항식 개수 (+ 무한원점)"""
        assert list(tables["p1_f2"].closed_points[:4]) == [3, 1, 2, 3]

    def test_divisor_counts_of_projective_line(self, tables):
        """b_n(ℙ¹/𝔽_2) = 2^{n+1} - 1"""
        assert list(tables["p1_f2"].divisor_counts[:4]) == [1, 3, 7, 15]

    def test_mobius_round_trip(self, tables, curve_counts):
        """N_m = Σ_{l|m} l·a_l"""
        for name, table in tables.items():
            assert SpectrumService.rebuild_counts(list(table.closed_points)) == curve_counts[name]

    def test_euler_product_matches_series(self, tables, zetas):
        """오일러 곱과 P(t)/((1-t)(1-qt)) 전개가 같은 b_n"""
        for name, table in tables.items():
            assert list(table.divisor_counts) == ZetaService.series_coefficients(zetas[name], table.max_degree)

    def test_degree_twelve_irreducibles_over_f2(self):
        """ℙ¹/𝔽_2 에서 a_12 = 335"""
        # Given
        counts = {m: 2 ** m + 1 for m in range(1, 13)}

        # When
        closed_points = SpectrumService.mobius_invert(counts, 12)
        report = ExplicitFormulaService.prime_counting_report(closed_points, 2, 12)

        # Then
        assert closed_points[11] == 335
        assert report["ok"]
        assert abs(report["degree_ratio"] - 1) < 0.05

    def test_non_divisible_counts_raise(self):
        """2·a_2 = N_2 - N_1 = 1 은 홀수"""
        with pytest.raises(InconsistentCounts):
            SpectrumService.mobius_invert({1: 3, 2: 4}, 2)

    def test_missing_counts_raise(self):
        with pytest.raises(NeedMoreCounts):
            SpectrumService.closed_point_spectrum({1: 3, 3: 9})

    def test_table_rejects_negative_closed_points(self):
        """
        Given: a_2 < 0 인 스펙트럼
        When: PointCountTable 생성
        Then: InconsistentCounts (exit 1)
        """
        with pytest.raises(InconsistentCounts) as exc_info:
            PointCountTable("c", ((1, 3), (2, 1)), (3, -1), (1, 3, 5))
        assert exc_info.value.exit_code == 1

    def test_table_rejects_negative_counts(self):
        with pytest.raises(InvalidArgument) as exc_info:
            PointCountTable("c", ((1, -1),), (0,), (1, 0))
        assert exc_info.value.to_dict()["error"]["type"] == "InvalidArgument"
