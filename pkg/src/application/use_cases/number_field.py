# -*- coding: utf-8 -*-
"""NumberFieldUseCase - 허수 이차체 / 리만 ξ 검사 보고서"""

import logging
import math
import time
from typing import Optional

import config
from ...domain.entities.report import CheckResult, Report
from ...domain.exceptions import InvalidArgument
from ...domain.services.archimedean_service import ArchimedeanService
from ...domain.services.number_field_service import NumberFieldService

logger = logging.getLogger(__name__)


class NumberFieldUseCase:
    """nf 명령을 담당하는 Use Case

    - run_discriminant: K = ℚ(√-D) 의 유수, 세타 함수방정식, 유수 항등식, 데데킨트 ξ_K 검사
    - run_riemann: ξ(s) 값과 함수방정식, 가우스 함수 검사

    Examples:
        >>> report = NumberFieldUseCase().run_discriminant(23)
        >>> report.sections["field"].h
        3
    """

    def run_discriminant(self, D: int, N_trunc: Optional[int] = None) -> Report:
        """
        --disc D

        Raises:
            InvalidDiscriminant: -D 가 기본 판별식이 아님
            InvalidArgument: N_trunc < 1
        """
        NumberFieldService.require_fundamental(D)
        N_trunc = self._truncation(N_trunc, 1)
        started = time.perf_counter()
        logger.info(f"Number field checks for Q(sqrt(-{D})), truncation floor {N_trunc}")

        data = NumberFieldService.field_data(D)
        report = Report(config.APP_VERSION, "nf", {"field": f"Q(sqrt(-{D}))", "D": D})
        report.add_section("field", data)

        by_forms = NumberFieldService.ideal_counts_by_forms(D, len(data.ideal_counts))
        report.add_check(CheckResult(
            "nf.ideal_counts_forms", list(data.ideal_counts) == by_forms,
            lhs=list(data.ideal_counts), rhs=by_forms,
            note="Dirichlet convolution of chi vs reduced-form representations / w"))

        analytic = NumberFieldService.analytic_class_number(D)
        report.add_section("analytic_class_number", analytic)
        report.add_check(CheckResult(
            "nf.class_number_character", analytic["ok"], lhs=analytic["h_analytic"], rhs=analytic["h_forms"],
            tolerance=config.TOLERANCES['class_number_relative'],
            note="w sqrt(D)/(2 pi) * sum chi(n)/n, relative error"))

        theta_points = list(config.NUMBER_FIELD_DEFAULTS['theta_points']) + [1 / math.sqrt(D)]
        for y in theta_points:
            theta = NumberFieldService.theta_checks(D, y, N_trunc)
            report.add_check(CheckResult(
                f"nf.theta.y{y:.6g}", theta["ok"], lhs=theta["theta_val"], rhs=theta["transformed"],
                tolerance=config.TOLERANCES['theta'],
                note="theta(iy) = theta(i/(Dy)) / (y sqrt(D))",
                details={"truncation": theta["truncation"], "tail_bound": theta["tail_bound"],
                         "rel_err": theta["rel_err"]}))

        identity = NumberFieldService.residue_identity_check(D, N_trunc)
        report.add_check(CheckResult(
            "nf.residue_identity", identity["ok"], lhs=identity["lhs"], rhs=identity["rhs"],
            tolerance=config.TOLERANCES['residue_identity'],
            note="h/w + sum a(n) e^{-2 pi n} = h/(w sqrt D) + D^{-1/2} sum a(n) e^{-2 pi n/D}",
            details={"truncation": identity["truncation"], "tail_bound": identity["tail_bound"],
                     "abs_err": identity["abs_err"]}))

        for index, s in enumerate(config.NUMBER_FIELD_DEFAULTS['dedekind_samples']):
            fe = NumberFieldService.dedekind_functional_equation_check(D, s)
            report.add_check(CheckResult(
                f"nf.dedekind_functional_equation.{index}", fe["ok"], lhs=fe["lhs"], rhs=fe["rhs"],
                tolerance=config.TOLERANCES['dedekind'],
                details={"s": complex(s), "relative_error": fe["relative_error"]}))

        residues = NumberFieldService.dedekind_residues(D)
        report.add_check(CheckResult(
            "nf.dedekind_residue_s1", abs(residues["res1"] - residues["res1_expected"]) < config.TOLERANCES['dedekind'],
            lhs=residues["res1"], rhs=residues["res1_expected"], tolerance=config.TOLERANCES['dedekind'],
            note="res_{s=1} xi_K = h/(w sqrt D)"))
        report.add_check(CheckResult(
            "nf.dedekind_residue_s0", abs(residues["res0"] - residues["res0_expected"]) < config.TOLERANCES['dedekind'],
            lhs=residues["res0"], rhs=residues["res0_expected"], tolerance=config.TOLERANCES['dedekind'],
            note="res_{s=0} xi_K = -h/w"))

        report.timings = {"total": time.perf_counter() - started}
        logger.info(f"Number field report: {report!r}")
        return report

    def run_riemann(self, s, N_trunc: Optional[int] = None) -> Report:
        """
        --riemann S

        Raises:
            PoleError: S ∈ {0, 1}
            InvalidArgument: N_trunc < 1
        """
        N_trunc = self._truncation(N_trunc, config.NUMBER_FIELD_DEFAULTS['riemann_trunc'])
        started = time.perf_counter()
        value = ArchimedeanService.riemann_xi(s, N_trunc)
        mirror = ArchimedeanService.riemann_xi(1 - s, N_trunc)

        report = Report(config.APP_VERSION, "nf", {"riemann_s": complex(s)})
        report.add_section("xi", {"s": complex(s), "value": value, "truncation": N_trunc})
        report.add_check(CheckResult(
            "nf.riemann_xi_mirror", abs(value - mirror) < config.TOLERANCES['riemann_xi'],
            lhs=value, rhs=mirror, tolerance=config.TOLERANCES['riemann_xi'], note="xi(s) = xi(1-s)"))

        checks = ArchimedeanService.riemann_xi_checks(N_trunc=N_trunc)
        report.add_section("riemann_xi", checks)
        anchor = checks["anchor"]
        report.add_check(CheckResult(
            "nf.riemann_xi_anchor", anchor["ok"], lhs=anchor["xi"], rhs=anchor["expected"],
            tolerance=config.TOLERANCES['riemann_xi_anchor'], note="xi(2) = pi/6"))
        for index, entry in enumerate(checks["samples"]):
            report.add_check(CheckResult(
                f"nf.riemann_xi_sample.{index}", entry["ok"], lhs=entry["xi"], rhs=entry["xi_mirror"],
                tolerance=config.TOLERANCES['riemann_xi'],
                details={"s": entry["s"], "closed_form": entry["closed_form"],
                         "closed_form_diff": entry["closed_form_diff"]}))

        gaussian = ArchimedeanService.gaussian_checks()
        report.add_section("gaussian", gaussian)
        report.add_check(CheckResult(
            "nf.gaussian_fourier", gaussian["fourier"]["ok"], lhs=gaussian["fourier"]["sup_err"], rhs=0.0,
            tolerance=config.TOLERANCES['gaussian'], note="FT of exp(-pi a x^2) = a^{-1/2} exp(-pi xi^2/a)"))
        report.add_check(CheckResult(
            "nf.gaussian_mellin", gaussian["mellin"]["ok"], lhs=gaussian["mellin"]["numeric"],
            rhs=gaussian["mellin"]["closed_form"], tolerance=config.TOLERANCES['gaussian'],
            note="int x^{s+2n} e^{-a x^2} dx/x = 1/2 a^{-n-s/2} Gamma(s/2+n)"))
        for entry in gaussian["poisson"]:
            report.add_check(CheckResult(
                f"nf.gaussian_poisson.t{entry['t']:g}", entry["ok"], lhs=entry["lhs"], rhs=entry["rhs"],
                tolerance=config.TOLERANCES['gaussian_poisson']))

        report.timings = {"total": time.perf_counter() - started}
        return report

    @staticmethod
    def _truncation(N_trunc: Optional[int], default: int) -> int:
        if N_trunc is None:
            return default
        if N_trunc < 1:
            raise InvalidArgument(f"--trunc must be >= 1, got {N_trunc}")
        return N_trunc
