# -*- coding: utf-8 -*-
"""VerifySuiteUseCase - 시드 고정 불변식 검증 스위트"""

import logging
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import config
from .analyze_curve import AnalyzeCurveUseCase
from ..services.random_input_service import RandomInputService
from ...domain.entities.graded_function import GradedFunction
from ...domain.entities.point_count_table import PointCountTable
from ...domain.entities.report import CheckResult, Report
from ...domain.entities.zeta_data import ZetaData
from ...domain.exceptions import InvalidArgument
from ...domain.services.explicit_formula_service import ExplicitFormulaService
from ...domain.services.graded_space_service import GradedSpaceService
from ...domain.services.torus_residue_service import TorusResidueService
from ...domain.services.zeta_service import ZetaService

logger = logging.getLogger(__name__)

SUITE_ALL = "all"


def aggregate_check(name: str, trials: Sequence[Callable[[], bool]], describe: Callable[[int], str],
                    note: str = "") -> CheckResult:
    """
    무작위 시행 묶음을 검사 한 건으로 요약

    lhs = 통과 수, rhs = 시행 수. 첫 실패 입력은 details에 기록합니다.
    """
    passed = 0
    first_failure = None
    for index, trial in enumerate(trials):
        if trial():
            passed += 1
        elif first_failure is None:
            first_failure = describe(index)
    details = {"first_failure": first_failure} if first_failure else {}
    return CheckResult(name, passed == len(trials), lhs=passed, rhs=len(trials), note=note, details=details)


class VerifySuiteUseCase:
    """검증 스위트 실행을 담당하는 Use Case

    비즈니스 규칙:
    - 무작위 입력은 RandomInputService(seed)에서만 생성 (같은 시드 → 같은 보고서)
    - "all"은 모든 스위트와 analyze의 제타 검사를 함께 실행
    - 알 수 없는 스위트 이름은 InvalidArgument (exit 2)

    Attributes:
        analyze_use_case: 점 개수 준비와 제타 검사를 공유하는 분석 Use Case
    """

    def __init__(self, analyze_use_case: AnalyzeCurveUseCase):
        self.analyze_use_case = analyze_use_case
        self._suites: Dict[str, Callable] = {
            "poisson": self.poisson_suite,
            "explicit": self.explicit_suite,
            "diagram": self.diagram_suite,
            "tate-iwasawa": self.tate_iwasawa_suite,
            "fourier": self.fourier_suite,
            "residues": self.residues_suite,
        }

    @property
    def suite_names(self) -> List[str]:
        return list(self._suites) + [SUITE_ALL]

    def execute(self, curve_path: Path, suite: str, seed: Optional[int] = None,
                max_degree: Optional[int] = None) -> Report:
        """
        verify 명령 실행

        Args:
            curve_path: 곡선 설정 파일
            suite: 스위트 이름 (config.VERIFY_SUITES 또는 "all")
            seed: 난수 시드 (None이면 VERIFY_DEFAULTS['seed'])
            max_degree: 최대 확대 차수 M (None이면 자동)

        Raises:
            InvalidArgument: 알 수 없는 스위트
        """
        if suite not in self.suite_names:
            raise InvalidArgument(f"unknown suite {suite!r}; expected one of {', '.join(self.suite_names)}")
        seed = config.VERIFY_DEFAULTS['seed'] if seed is None else seed

        total_started = time.perf_counter()
        curve = self.analyze_use_case.curve_repository.load(curve_path)
        M = self.analyze_use_case.resolve_max_degree(curve, max_degree)
        timings: Dict[str, float] = {}
        _, table, zeta = self.analyze_use_case.prepare(curve, M, timings)

        report = self.analyze_use_case.new_report("verify", curve)
        report.add_section("suite", {"name": suite, "seed": seed})
        report.add_section("zeta", {"q": zeta.q, "g": zeta.g, "P": list(zeta.coefficients), "h": zeta.class_number})

        rng = RandomInputService(seed)
        names = list(self._suites) if suite == SUITE_ALL else [suite]
        for name in names:
            started = time.perf_counter()
            checks = self._suites[name](zeta, table, rng)
            timings[name] = time.perf_counter() - started
            for check in checks:
                report.add_check(check)
            logger.info(f"Suite {name}: {sum(c.ok for c in checks)}/{len(checks)} checks passed")

        if suite == SUITE_ALL:
            started = time.perf_counter()
            _, checks = AnalyzeCurveUseCase.zeta_sections_and_checks(zeta, table)
            for check in checks:
                report.add_check(check)
            timings["zeta_core"] = time.perf_counter() - started

        timings["total"] = time.perf_counter() - total_started
        report.timings = timings
        return report

    # ------------------------------------------------------------------
    # poisson
    # ------------------------------------------------------------------

    @staticmethod
    def poisson_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        """d × shift 격자 위 유수 Poisson 항등식"""
        d_low, d_high = config.VERIFY_DEFAULTS['degree_range']
        n_low, n_high = config.VERIFY_DEFAULTS['shift_range']
        checks = []
        for d in range(d_low, d_high + 1):
            for shift in range(n_low, n_high + 1):
                result = TorusResidueService.poisson_residue_check(z, d, shift)
                lhs = result["lhs_pair"][0] + result["lhs_pair"][1]
                rhs = (result["rhs_pair"][0] + result["rhs_pair"][1]) * result["rhs_factor"]
                checks.append(CheckResult(
                    f"poisson.d{d}.shift{shift}", result["ok"], lhs=lhs, rhs=rhs,
                    details={"lhs_pair": result["lhs_pair"], "rhs_pair": result["rhs_pair"],
                             "rhs_factor": result["rhs_factor"]}))
        return checks

    # ------------------------------------------------------------------
    # explicit
    # ------------------------------------------------------------------

    @staticmethod
    def explicit_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        """무작위 유한 지지 f에 대한 명시 공식 양변의 정확한 일치"""
        support = config.VERIFY_DEFAULTS['explicit_support']
        checks = []
        for index in range(config.VERIFY_DEFAULTS['explicit_random_count']):
            f = rng.finite_function(support)
            sides = ExplicitFormulaService.explicit_formula_sides(f, z, list(table.closed_points))
            checks.append(CheckResult(
                f"explicit.random.{index}", sides["ok"], lhs=sides["lhs"], rhs=sides["rhs"],
                note=sides["sign_note"] if index == 0 else "", details={"f": f}))

        n_max = max(abs(support[0]), abs(support[1]))
        sums = ExplicitFormulaService.power_sums(z, n_max)
        lhs = [sums.s(-n) for n in range(n_max + 1)]
        rhs = [Fraction(z.q) ** -n * sums.s(n) for n in range(n_max + 1)]
        checks.append(CheckResult(
            "explicit.power_sum_pairing", lhs == rhs, lhs=lhs, rhs=rhs, note="s_{-n} = q^{-n} s_n"))
        return checks

    # ------------------------------------------------------------------
    # diagram
    # ------------------------------------------------------------------

    @staticmethod
    def diagram_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        """Mellin / 대합 / 푸리에 가환 도표"""
        q, g = z.q, z.g
        d_low, d_high = config.VERIFY_DEFAULTS['degree_range']
        checks = []
        for d in range(d_low, d_high + 1):
            factor = Fraction(q) ** (1 - g - d)
            dual = 2 - 2 * g - d

            pulled = TorusResidueService.involution_pullback(TorusResidueService.standard_global(z, d))
            expected = TorusResidueService.standard_global(z, dual).scale(factor)
            checks.append(CheckResult(
                f"diagram.torus.d{d}", pulled == expected, lhs=pulled, rhs=expected,
                note="i* F_D = q^{1-g-d} F_{2-2g-d}"))

            pushed = GradedSpaceService.pushforward_standard(z, d)
            transformed = GradedSpaceService.graded_fourier_pp(pushed, q)
            expected_graded = GradedSpaceService.pushforward_standard(z, dual).scale(factor)
            checks.append(CheckResult(
                f"diagram.graded.d{d}", transformed == expected_graded, lhs=transformed, rhs=expected_graded,
                note="F pi_* f_D = q^{1-g-d} pi_* f_{K-D}"))

            mellin = TorusResidueService.mellin(pushed)
            standard = TorusResidueService.standard_global(z, d)
            checks.append(CheckResult(
                f"diagram.mellin.d{d}", mellin == standard, lhs=mellin, rhs=standard,
                note="M pi_* f_D = F_D"))

        count = config.VERIFY_DEFAULTS['conjugacy_random_count']
        grid_q = config.VERIFY_DEFAULTS['fourier_grid_q']
        grid_k = config.VERIFY_DEFAULTS['fourier_grid_k']

        pp_inputs = [rng.d_plus_plus_function(q) for _ in range(count)]
        checks.append(aggregate_check(
            "diagram.conjugacy_pp",
            [lambda f=f: TorusResidueService.mellin(GradedSpaceService.graded_fourier_pp(f, q))
             == TorusResidueService.involution_pullback(TorusResidueService.mellin(f), q) for f in pp_inputs],
            lambda i: repr(pp_inputs[i]),
            note="M F = i* M on D_plus_plus"))

        local_inputs = [(rng.d_plus_function(), rng.choice(grid_q), rng.choice(grid_k)) for _ in range(count)]
        checks.append(aggregate_check(
            "diagram.conjugacy_local",
            [lambda f=f, qx=qx, kx=kx: TorusResidueService.mellin(GradedSpaceService.local_fourier(f, qx, kx))
             == TorusResidueService.torus_fourier_local(TorusResidueService.mellin(f), qx, kx)
             for f, qx, kx in local_inputs],
            lambda i: repr(local_inputs[i]),
            note="M F_x = F_x M on D_plus"))

        round_trip = [rng.function_in(index % 3, q) for index in range(config.VERIFY_DEFAULTS['round_trip_random_count'])]
        checks.append(aggregate_check(
            "diagram.mellin_round_trip",
            [lambda f=f: TorusResidueService.mellin_inverse(TorusResidueService.mellin(f)) == f for f in round_trip],
            lambda i: repr(round_trip[i]),
            note="M^-1 M = id on D, D_plus, D_plus_plus"))

        finite_inputs = [rng.finite_function((-5, 5)) for _ in range(count)]
        checks.append(aggregate_check(
            "diagram.pointwise_fourier",
            [lambda f=f: VerifySuiteUseCase._pointwise_fourier_matches(f, q) for f in finite_inputs],
            lambda i: repr(finite_inputs[i]),
            note="(F f)(n) = q^n f(-n) on finite support"))
        return checks

    @staticmethod
    def _pointwise_fourier_matches(f: GradedFunction, q: int) -> bool:
        transformed = GradedSpaceService.graded_fourier_pp(f, q)
        return all(transformed(n) == f(-n) * Fraction(q) ** n for n in range(-8, 9))

    # ------------------------------------------------------------------
    # tate-iwasawa
    # ------------------------------------------------------------------

    @staticmethod
    def tate_iwasawa_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        checks = [
            AnalyzeCurveUseCase.tate_iwasawa_check(z, 2 * z.g + offset)
            for offset in config.VERIFY_DEFAULTS['tate_iwasawa_offsets']
        ]
        principal = ZetaService.principal_parts_check(z)
        checks.append(CheckResult(
            "tate_iwasawa.principal_parts", principal["ok"], lhs=principal["entire_part"], rhs=None,
            note=f"entire part has degree <= {max(2 * z.g - 2, 0)}"))
        return checks

    # ------------------------------------------------------------------
    # fourier
    # ------------------------------------------------------------------

    @staticmethod
    def fourier_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        """국소 / 대역 푸리에 변환의 대합성과 합성곱 호환성"""
        q = z.q
        count = config.VERIFY_DEFAULTS['fourier_random_count']
        inputs = [rng.d_plus_function() for _ in range(count)]
        checks = []
        for q_x in config.VERIFY_DEFAULTS['fourier_grid_q']:
            for k_x in config.VERIFY_DEFAULTS['fourier_grid_k']:
                checks.append(aggregate_check(
                    f"fourier.local_involution.q{q_x}.k{k_x}",
                    [lambda f=f, qx=q_x, kx=k_x: GradedSpaceService.local_fourier(
                        GradedSpaceService.local_fourier(f, qx, kx), qx, kx) == f for f in inputs],
                    lambda i: repr(inputs[i]),
                    note="F_x F_x = id on D_plus"))

        pp_inputs = [rng.function_in(index % 3, q) for index in range(count)]
        checks.append(aggregate_check(
            "fourier.global_involution",
            [lambda f=f: GradedSpaceService.graded_fourier_pp(GradedSpaceService.graded_fourier_pp(f, q), q) == f
             for f in pp_inputs],
            lambda i: repr(pp_inputs[i]),
            note="F F = id on D_plus_plus"))

        triples = [(rng.finite_function((-3, 3)), rng.finite_function((-3, 3)), rng.d_plus_function())
                   for _ in range(config.VERIFY_DEFAULTS['conjugacy_random_count'])]
        checks.append(aggregate_check(
            "fourier.convolution_associative",
            [lambda a=a, b=b, c=c: GradedSpaceService.convolve(a, GradedSpaceService.convolve(b, c))
             == GradedSpaceService.convolve(GradedSpaceService.convolve(a, b), c) for a, b, c in triples],
            lambda i: repr(triples[i]),
            note="f1 * (f2 * g) = (f1 * f2) * g"))

        shifted = [(rng.randint(-4, 4), rng.d_plus_function(), rng.choice(config.VERIFY_DEFAULTS['fourier_grid_q']),
                    rng.choice(config.VERIFY_DEFAULTS['fourier_grid_k']))
                   for _ in range(config.VERIFY_DEFAULTS['conjugacy_random_count'])]
        checks.append(aggregate_check(
            "fourier.convolution_delta_basis",
            [lambda m=m, g=g, qx=qx, kx=kx: VerifySuiteUseCase._delta_convolution_matches(m, g, qx, kx)
             for m, g, qx, kx in shifted],
            lambda i: repr(shifted[i]),
            note="F_x(delta_(m) * g) = q_x^{-m} delta_(-m) * F_x(g)"))
        return checks

    @staticmethod
    def _delta_convolution_matches(m: int, g: GradedFunction, q_x: int, k_x: int) -> bool:
        lhs = GradedSpaceService.local_fourier(GradedSpaceService.convolve(GradedFunction.delta(m), g), q_x, k_x)
        rhs = GradedSpaceService.convolve(
            GradedFunction.delta(-m), GradedSpaceService.local_fourier(g, q_x, k_x)).scale(Fraction(q_x) ** -m)
        return lhs == rhs

    # ------------------------------------------------------------------
    # residues
    # ------------------------------------------------------------------

    @staticmethod
    def residues_suite(z: ZetaData, table: PointCountTable, rng: RandomInputService) -> List[CheckResult]:
        """유수 합 0, 대합 불변성, 곡선 제타의 유수"""
        q = z.q
        degree = config.VERIFY_DEFAULTS['residue_numerator_degree']
        inputs = [rng.torus_rational(q, degree) for _ in range(config.VERIFY_DEFAULTS['residue_random_count'])]
        checks = [
            aggregate_check(
                "residues.sum_zero",
                [lambda R=R: TorusResidueService.residue_report(R).total.is_zero() for R in inputs],
                lambda i: repr(inputs[i]),
                note="res_0 + res_1 + res_{1/q} + res_inf = 0"),
            aggregate_check(
                "residues.involution_invariance",
                [lambda R=R: TorusResidueService.involution_residue_check(R)["ok"] for R in inputs],
                lambda i: repr(inputs[i]),
                note="res_P(eta) = res_{i(P)}(i* eta)"),
        ]

        _, res0, res1 = ZetaService.class_number_and_residues(z)
        report = TorusResidueService.residue_report(TorusResidueService.standard_global(z, 0))
        checks.append(CheckResult(
            "residues.zeta_at_1", report.at("1") == -res0.coeff, lhs=report.at("1"), rhs=-res0.coeff,
            note="res_{z=1}(Z dz/z) = -ln q * res_{s=0} zeta_C"))
        checks.append(CheckResult(
            "residues.zeta_at_q_inv", report.at("q_inv") == -res1.coeff, lhs=report.at("q_inv"), rhs=-res1.coeff,
            note="res_{z=1/q}(Z dz/z) = -ln q * res_{s=1} zeta_C"))
        checks.append(CheckResult(
            "residues.zeta_sum", report.total.is_zero(), lhs=report.total, rhs=0, details={"residues": report}))
        return checks
