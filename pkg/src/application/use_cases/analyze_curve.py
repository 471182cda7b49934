# -*- coding: utf-8 -*-
"""AnalyzeCurveUseCase - 점 개수 → 스펙트럼 → P(t) 적합 → 제타 검사 파이프라인"""

import logging
import time
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import config
from ..interfaces.service_interface import IPointCountService
from ...domain.entities.curve_model import CurveModel
from ...domain.entities.point_count_table import PointCountTable
from ...domain.entities.report import CheckResult, Report
from ...domain.entities.zeta_data import ZetaData
from ...domain.exceptions import InvalidArgument, TooLarge
from ...domain.services.explicit_formula_service import ExplicitFormulaService
from ...domain.services.spectrum_service import SpectrumService
from ...domain.services.torus_residue_service import TorusResidueService
from ...domain.services.zeta_service import ZetaService
from ...infrastructure.repositories.curve_config_repository import CurveConfigRepository

logger = logging.getLogger(__name__)


class AnalyzeCurveUseCase:
    """곡선 분석 파이프라인을 담당하는 Use Case

    비즈니스 규칙:
    - 최대 차수 M은 2g+3 이상이어야 함 (생략 시 max(DEFAULT_MAX_DEGREE, 2g+3))
    - P(t)는 N_1..N_{2g}만으로 적합하고 나머지 N_m은 예측 검증에 사용
    - 모든 검사는 양변을 보고서에 기록

    Attributes:
        curve_repository: 곡선 설정 repository
        point_count_service: 캐시를 사용하는 점 개수 서비스

    Examples:
        >>> use_case = AnalyzeCurveUseCase(CurveConfigRepository(), PointCountService(cache_repo))
        >>> report = use_case.execute(Path("curves/elliptic_f2.toml"), max_degree=5)
        >>> report.sections["zeta"]["P"]
        [1, 0, 2]
    """

    def __init__(self, curve_repository: CurveConfigRepository, point_count_service: IPointCountService):
        """AnalyzeCurveUseCase 초기화

        Args:
            curve_repository: 곡선 설정 repository
            point_count_service: 점 개수 서비스
        """
        self.curve_repository = curve_repository
        self.point_count_service = point_count_service

    # ------------------------------------------------------------------
    # 준비 단계 (VerifySuiteUseCase와 공유)
    # ------------------------------------------------------------------

    @staticmethod
    def largest_affordable_degree(q: int) -> int:
        """q^m ≤ FIELD_CARDINALITY_CAP 인 최대 m"""
        m = 0
        while q ** (m + 1) <= config.FIELD_CARDINALITY_CAP:
            m += 1
        return m

    @staticmethod
    def resolve_max_degree(curve: CurveModel, max_degree: Optional[int] = None) -> int:
        """
        분석 최대 차수 결정

        기본값은 max(DEFAULT_MAX_DEGREE, 2g+3)이되 q^M이 필드 상한을 넘지 않는 차수로 줄입니다.
        2g+3 아래로는 줄이지 않습니다.

        Raises:
            InvalidArgument: 명시한 M이 2g+3 미만
            TooLarge: q^M (또는 q^{2g+3})이 필드 상한 초과
        """
        minimum = 2 * curve.genus + 3
        affordable = AnalyzeCurveUseCase.largest_affordable_degree(curve.q)
        if max_degree is None:
            if affordable < minimum:
                raise TooLarge(
                    f"genus {curve.genus} over F_{curve.q} needs degree 2g+3 = {minimum}, "
                    f"but |F_{curve.q}^{minimum}| exceeds cap {config.FIELD_CARDINALITY_CAP}")
            M = min(max(config.DEFAULT_MAX_DEGREE, minimum), affordable)
            if M < config.DEFAULT_MAX_DEGREE:
                logger.info(f"Default degree capped at {M} for q = {curve.q}")
            return M
        if max_degree < minimum:
            raise InvalidArgument(f"--max-degree must be >= 2g+3 = {minimum} for genus {curve.genus}, got {max_degree}")
        if max_degree > affordable:
            raise TooLarge(f"|F_{curve.q}^{max_degree}| exceeds cap {config.FIELD_CARDINALITY_CAP}; "
                           f"use --max-degree <= {affordable}")
        return max_degree

    def prepare(self, curve: CurveModel, max_degree: int,
                timings: Dict[str, float]) -> Tuple[Dict[int, int], PointCountTable, ZetaData]:
        """점 개수, 스펙트럼, 적합된 ZetaData"""
        started = time.perf_counter()
        counts = self.point_count_service.get_counts(curve, max_degree)
        timings["count"] = time.perf_counter() - started

        started = time.perf_counter()
        table = SpectrumService.closed_point_spectrum(counts, curve.curve_id)
        fit_counts, _ = SpectrumService.split_counts(counts, 2 * curve.genus)
        zeta = ZetaService.fit_numerator(curve.q, curve.genus, fit_counts)
        timings["fit"] = time.perf_counter() - started
        logger.info(f"Fitted {zeta!r} for {curve.curve_id}")
        return counts, table, zeta

    def new_report(self, command: str, curve: CurveModel) -> Report:
        cache = getattr(self.point_count_service, "last_stats", {})
        return Report(config.APP_VERSION, command, curve.to_dict(), cache=dict(cache))

    # ------------------------------------------------------------------
    # 실행
    # ------------------------------------------------------------------

    def execute(self, curve_path: Path, max_degree: Optional[int] = None) -> Report:
        """
        analyze 명령 실행

        Args:
            curve_path: 곡선 설정 파일
            max_degree: 최대 확대 차수 M (None이면 자동)

        Returns:
            Report: counts / zeta / power_sums / prime_counting / torus_residues 섹션과 검사 목록
        """
        total_started = time.perf_counter()
        curve = self.curve_repository.load(curve_path)
        M = self.resolve_max_degree(curve, max_degree)
        logger.info(f"Analyzing {curve!r} up to degree {M}")

        timings: Dict[str, float] = {}
        counts, table, zeta = self.prepare(curve, M, timings)
        report = self.new_report("analyze", curve)

        started = time.perf_counter()
        sections, checks = self.zeta_sections_and_checks(zeta, table)
        for name, content in sections.items():
            report.add_section(name, content)
        for check in checks:
            report.add_check(check)
        timings["checks"] = time.perf_counter() - started
        timings["total"] = time.perf_counter() - total_started
        report.timings = timings

        logger.info(f"Analysis finished: {report!r}")
        return report

    # ------------------------------------------------------------------
    # 제타 검사
    # ------------------------------------------------------------------

    @staticmethod
    def zeta_sections_and_checks(z: ZetaData, table: PointCountTable) -> Tuple[Dict[str, object], List[CheckResult]]:
        """
        zeta_core / explicit_formula 전체 검사

        Args:
            z: 적합된 ZetaData
            table: 점 개수 표 (M ≥ 2g+1)

        Returns:
            (섹션, 검사 목록)
        """
        g, q = z.g, z.q
        M = table.max_degree
        counts = table.counts_dict()
        checks: List[CheckResult] = []

        # 스펙트럼 왕복
        rebuilt = SpectrumService.rebuild_counts(list(table.closed_points))
        checks.append(CheckResult(
            "counts.mobius_round_trip", rebuilt == counts,
            lhs=[rebuilt[m] for m in sorted(rebuilt)], rhs=[counts[m] for m in sorted(counts)],
            note="N_m = sum_{l|m} l*a_l"))

        # 적합 범위 밖 N_m 예측
        _, extra = SpectrumService.split_counts(counts, 2 * g)
        lefschetz = ExplicitFormulaService.lefschetz_check(z, extra)
        checks.append(CheckResult(
            "zeta.predict_counts", lefschetz["ok"],
            lhs=[e["predicted"] for e in lefschetz["entries"]],
            rhs=[e["observed"] for e in lefschetz["entries"]],
            note="N_m = 1 + q^m - s_m for m > 2g",
            details={"m": [e["m"] for e in lefschetz["entries"]]}))

        # 함수방정식과 리만 가설
        fe = ZetaService.functional_equation_check(z)
        a = z.coefficients
        checks.append(CheckResult(
            "zeta.coefficient_symmetry", fe["symmetric"],
            lhs=[a[2 * g - i] for i in range(2 * g + 1)],
            rhs=[Fraction(q) ** (g - i) * a[i] for i in range(2 * g + 1)],
            note="a_{2g-i} = q^{g-i} a_i"))
        checks.append(CheckResult(
            "zeta.riemann_hypothesis", fe["riemann_hypothesis"],
            lhs=fe["max_deviation"], rhs=0.0, tolerance=config.TOLERANCES['root_modulus'],
            note="max ||lambda| - sqrt(q)|", details={"root_moduli": fe["root_moduli"]}))

        # 유수
        h, res0, res1 = ZetaService.class_number_and_residues(z)
        laurent = ZetaService.laurent_residue_crosscheck(z)
        checks.append(CheckResult(
            "zeta.residues_laurent", laurent["ok"],
            lhs=[laurent["res0_symbolic"], laurent["res1_symbolic"]],
            rhs=[res0.coeff, res1.coeff],
            note="coefficients of 1/ln q at s = 0 and s = 1"))

        # b_n 두 경로
        series = ZetaService.series_coefficients(z, M)
        checks.append(CheckResult(
            "zeta.series_two_paths", list(table.divisor_counts) == series,
            lhs=list(table.divisor_counts), rhs=series,
            note="Euler product over closed points vs P(t)/((1-t)(1-qt))"))
        start = max(2 * g - 1, 0)
        tail = [ZetaService.riemann_roch_tail(z, n) for n in range(start, M + 1)]
        checks.append(CheckResult(
            "zeta.riemann_roch_tail", [Fraction(b) for b in series[start:]] == tail,
            lhs=series[start:], rhs=tail, details={"from_n": start},
            note="b_n = h (q^{n+1-g} - 1)/(q-1) for n >= 2g-1"))

        # 주부분 / Tate–Iwasawa
        principal = ZetaService.principal_parts_check(z)
        checks.append(CheckResult(
            "zeta.principal_parts", principal["ok"],
            lhs=principal["entire_part"], rhs=None,
            note=f"entire part is a polynomial of degree <= {max(2 * g - 2, 0)}",
            details={"remainder_zero": principal["remainder_zero"]}))
        for offset in config.VERIFY_DEFAULTS['tate_iwasawa_offsets']:
            checks.append(AnalyzeCurveUseCase.tate_iwasawa_check(z, 2 * g + offset))

        # 수치 함수방정식
        for index, s in enumerate(config.ZETA_NUMERIC_SAMPLES):
            numeric = ZetaService.functional_equation_numeric(z, s)
            checks.append(CheckResult(
                f"zeta.functional_equation_numeric.{index}", numeric["ok"],
                lhs=numeric["lhs"], rhs=numeric["rhs"], tolerance=config.TOLERANCES['zeta_numeric'],
                details={"s": complex(s), "relative_error": numeric["relative_error"]}))

        # 거듭제곱 합 / 소수 정리
        power = ExplicitFormulaService.power_sum_numeric_check(z, M)
        checks.append(CheckResult(
            "explicit.power_sums_numeric", power["ok"],
            lhs=power["max_deviation"], rhs=0.0, tolerance=config.TOLERANCES['power_sum_numeric'],
            details={"pairing": power["pairing"], "n_max": M}))
        prime = ExplicitFormulaService.prime_counting_report(list(table.closed_points), q, M, g)
        checks.append(CheckResult(
            "explicit.prime_counting", prime["ok"],
            lhs=prime["degree_ratio"], rhs=1.0, tolerance=prime["bound"],
            note="|a_m m / q^m - 1| <= 3g q^{-m/2} + q^{-m/2+1}"))

        table_sums = ExplicitFormulaService.power_sums(z, M)
        residues = TorusResidueService.residue_report(TorusResidueService.standard_global(z, 0))
        sections = {
            "counts": table.to_dict(),
            "zeta": {
                "q": q,
                "g": g,
                "P": list(z.coefficients),
                "h": h,
                "residues": {"s=0": res0, "s=1": res1},
                "root_moduli": fe["root_moduli"],
            },
            "power_sums": {str(n): table_sums.s(n) for n in range(-M, M + 1)},
            "prime_counting": prime,
            "torus_residues": residues,
        }
        return sections, checks

    @staticmethod
    def tate_iwasawa_check(z: ZetaData, N: int) -> CheckResult:
        decomposition = ZetaService.tate_iwasawa_decomposition(z, N)
        terms = zip(decomposition["T1"], decomposition["T2"], decomposition["T3"], decomposition["T4"])
        return CheckResult(
            f"zeta.tate_iwasawa.N{N}", decomposition["ok"],
            lhs=decomposition["lhs"], rhs=[sum(parts) for parts in terms],
            note="box cutoff: b_n = T1 + T2 + T3 + T4 coefficientwise")
