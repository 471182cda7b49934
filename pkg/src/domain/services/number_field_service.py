# -*- coding: utf-8 -*-
"""NumberFieldService - 허수 이차체의 유수, 아이디얼 개수, 세타/데데킨트 항등식"""

import logging
import math
from typing import Any, Dict, List, Tuple

import mpmath
import numpy as np
from sympy import factorint, jacobi_symbol

import config
from ..entities.quadratic_field_data import CompletedZetaTerm, QuadraticFieldData
from ..exceptions import InvalidArgument, InvalidDiscriminant, PoleError

logger = logging.getLogger(__name__)


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def geometric_tail_bound(ratio: float, N: int) -> float:
    """Σ_{n>N} (n+1)·r^n 의 닫힌 형태 (a(n) ≤ n+1 상한)"""
    return ratio ** (N + 1) * ((N + 2) - (N + 1) * ratio) / (1 - ratio) ** 2


class NumberFieldService:
    """K = ℚ(√-D) 에 대한 정확한 형식 계산과 배정밀도 세타/제타 검사"""

    # ------------------------------------------------------------------
    # 판별식 / 지표
    # ------------------------------------------------------------------

    @staticmethod
    def is_fundamental(D: int) -> bool:
        """
        -D 가 기본 판별식인지 판정

        Examples:
            >>> NumberFieldService.is_fundamental(23), NumberFieldService.is_fundamental(12)
            (True, False)
        """
        if D < 3:
            return False
        if D % 4 == 3:
            return _is_squarefree(D)
        if D % 4 == 0:
            m = D // 4
            return m % 4 in (1, 2) and _is_squarefree(m)
        return False

    @staticmethod
    def require_fundamental(D: int) -> None:
        if not NumberFieldService.is_fundamental(D):
            raise InvalidDiscriminant(f"-{D} is not a fundamental discriminant")

    @staticmethod
    def kronecker_symbol(a: int, n: int) -> int:
        """
        크로네커 기호 (a/n) (2-adic 규칙과 부호 규칙 포함)

        Examples:
            >>> NumberFieldService.kronecker_symbol(-4, 5)
            1
        """
        if n == 0:
            return 1 if abs(a) == 1 else 0
        result = 1
        if n < 0:
            n = -n
            if a < 0:
                result = -1
        twos = 0
        while n % 2 == 0:
            n //= 2
            twos += 1
        if twos:
            if a % 2 == 0:
                return 0
            if a % 8 in (3, 5) and twos % 2:
                result = -result
        if n == 1:
            return result
        return result * int(jacobi_symbol(a % n, n))

    @staticmethod
    def character_table(D: int, length: int) -> np.ndarray:
        """χ_{-D}(n), n = 1..length (주기 D로 타일링)"""
        period = np.array([NumberFieldService.kronecker_symbol(-D, n) for n in range(1, D + 1)], dtype=np.int64)
        repeats = -(-length // D)
        return np.tile(period, repeats)[:length]

    # ------------------------------------------------------------------
    # 유수 / 아이디얼 개수
    # ------------------------------------------------------------------

    @staticmethod
    def class_number_bqf(D: int) -> Tuple[int, List[Tuple[int, int, int]]]:
        """
        축소 이차 형식 열거로 유수 계산

        b² - 4ac = -D, |b| ≤ a ≤ c, (|b| = a 또는 a = c 이면 b ≥ 0), a ≤ √(D/3)

        Raises:
            InvalidDiscriminant: -D가 기본 판별식이 아님

        Examples:
            >>> NumberFieldService.class_number_bqf(23)
            (3, [(1, 1, 6), (2, -1, 3), (2, 1, 3)])
        """
        NumberFieldService.require_fundamental(D)
        forms = []
        a_max = math.isqrt(D // 3)
        for a in range(1, a_max + 1):
            for b in range(-a + 1, a + 1):
                if (b * b + D) % (4 * a):
                    continue
                c = (b * b + D) // (4 * a)
                if c < a:
                    continue
                if b < 0 and (a == c or -b == a):
                    continue
                forms.append((a, b, c))
        logger.debug(f"class_number_bqf D={D}: {forms}")
        return len(forms), forms

    @staticmethod
    def ideal_counts(D: int, n_max: int) -> List[int]:
        """
        a(n) = Σ_{d|n} χ_{-D}(d), n = 1..n_max

        Examples:
            >>> NumberFieldService.ideal_counts(4, 5)
            [1, 1, 0, 1, 2]
        """
        NumberFieldService.require_fundamental(D)
        chi = NumberFieldService.character_table(D, n_max)
        counts = np.zeros(n_max + 1, dtype=np.int64)
        for d in range(1, n_max + 1):
            counts[d::d] += chi[d - 1]
        return [int(x) for x in counts[1:]]

    @staticmethod
    def ideal_counts_by_forms(D: int, n_max: int) -> List[int]:
        """
        축소 형식의 표현 개수 합 / w (교차 검증용)

        양의 정부호 형식 ax² + bxy + cy² = n 의 정수 해를 셉니다.
        """
        _, forms = NumberFieldService.class_number_bqf(D)
        w = QuadraticFieldData.unit_count(D)
        totals = np.zeros(n_max + 1, dtype=np.int64)
        for a, b, c in forms:
            # ax² + bxy + cy² ≥ (D / 4c)·x² 이고 대칭으로 y도 같음
            x_bound = math.isqrt(4 * c * n_max // D) + 1
            y_bound = math.isqrt(4 * a * n_max // D) + 1
            x, y = np.meshgrid(np.arange(-x_bound, x_bound + 1), np.arange(-y_bound, y_bound + 1))
            values = a * x * x + b * x * y + c * y * y
            values = values[(values >= 1) & (values <= n_max)]
            totals += np.bincount(values.ravel(), minlength=n_max + 1)[:n_max + 1]
        if np.any(totals % w):
            raise InvalidArgument(f"representation counts for D={D} are not divisible by w={w}")
        return [int(x) for x in (totals // w)[1:]]

    @staticmethod
    def analytic_class_number(D: int, terms: int = None) -> Dict[str, Any]:
        """
        h ≈ w√D/(2π)·Σ_{n≤terms} χ(n)/n

        Returns:
            {"terms", "L1", "h_analytic", "h_forms", "relative_error", "ok"}
        """
        terms = terms or config.NUMBER_FIELD_DEFAULTS['analytic_terms']
        h, _ = NumberFieldService.class_number_bqf(D)
        w = QuadraticFieldData.unit_count(D)
        chi = NumberFieldService.character_table(D, terms).astype(np.float64)
        L1 = float(np.sum(chi / np.arange(1, terms + 1, dtype=np.float64)))
        h_analytic = w * math.sqrt(D) / (2 * math.pi) * L1
        relative = abs(h_analytic - h) / h
        return {
            "terms": terms,
            "L1": L1,
            "h_analytic": h_analytic,
            "h_forms": h,
            "relative_error": relative,
            "ok": relative < config.TOLERANCES['class_number_relative'],
        }

    @staticmethod
    def field_data(D: int, n_max: int = None) -> QuadraticFieldData:
        n_max = n_max or config.NUMBER_FIELD_DEFAULTS['ideal_count_n_max']
        h, forms = NumberFieldService.class_number_bqf(D)
        return QuadraticFieldData(
            D=D, h=h, w=QuadraticFieldData.unit_count(D),
            forms=tuple(forms), ideal_counts=tuple(NumberFieldService.ideal_counts(D, n_max)),
        )

    # ------------------------------------------------------------------
    # 세타 급수
    # ------------------------------------------------------------------

    @staticmethod
    def theta_series_truncation(y: float, floor: float, relative: float) -> Tuple[int, float]:
        """
        꼬리 Σ_{n>N} a(n)e^{-2πny} 가 relative·floor 미만이 되는 최소 N

        Args:
            y: 허수축 위치 (> 0)
            floor: θ의 하한 (h/w)
            relative: 허용 상대 꼬리

        Returns:
            (N, 꼬리 상한)
        """
        if y <= 0:
            raise InvalidArgument(f"y must be positive, got {y}")
        ratio = math.exp(-2 * math.pi * y)
        N = 1
        bound = geometric_tail_bound(ratio, N)
        while bound >= relative * floor:
            N += 1
            bound = geometric_tail_bound(ratio, N)
        return N, bound

    @staticmethod
    def theta_value(data: QuadraticFieldData, y: float, N: int) -> float:
        """θ_K(iy) = h/w + Σ_{n≤N} a(n)·e^{-2πny}"""
        counts = np.array(NumberFieldService.ideal_counts(data.D, N), dtype=np.float64)
        n = np.arange(1, N + 1, dtype=np.float64)
        return data.h / data.w + float(np.sum(counts * np.exp(-2 * np.pi * n * y)))

    @staticmethod
    def theta_checks(D: int, y: float, N_trunc: int = 1) -> Dict[str, Any]:
        """
        θ_K(iy) = (1/(y√D))·θ_K(i/(Dy)) 검사

        절단은 max(N_trunc, 인증된 N) 을 사용하며 꼬리 상한을 보고서에 기록합니다.

        Raises:
            InvalidArgument: y ≤ 0
        """
        if y <= 0:
            raise InvalidArgument(f"y must be positive, got {y}")
        data = NumberFieldService.field_data(D)
        floor = data.h / data.w
        dual = 1.0 / (D * y)
        relative = config.TOLERANCES['theta_tail']
        N_direct, tail_direct = NumberFieldService.theta_series_truncation(y, floor, relative)
        N_dual, tail_dual = NumberFieldService.theta_series_truncation(dual, floor, relative)
        N = max(N_trunc, N_direct, N_dual)

        theta = NumberFieldService.theta_value(data, y, N)
        transformed = NumberFieldService.theta_value(data, dual, N) / (y * math.sqrt(D))
        rel_err = abs(theta - transformed) / abs(theta)
        return {
            "D": D,
            "y": y,
            "truncation": N,
            "tail_bound": max(tail_direct, tail_dual),
            "theta_val": theta,
            "transformed": transformed,
            "rel_err": rel_err,
            "ok": rel_err < config.TOLERANCES['theta'],
        }

    @staticmethod
    def residue_identity_check(D: int, N_trunc: int = 1) -> Dict[str, Any]:
        """
        h/w + Σ a(n)e^{-2πn} = h/(w√D) + D^{-1/2}·Σ a(n)e^{-2πn/D}

        (res_{s=0}ξ_K + res_{s=1}ξ_K 로부터 나오는 항등식; θ_K 의 z = i 값)
        """
        data = NumberFieldService.field_data(D)
        relative = config.TOLERANCES['residue_tail']
        # 두 변 모두 상수항 h/w 이상
        floor = data.h / data.w
        N_lhs, tail_lhs = NumberFieldService.theta_series_truncation(1.0, floor, relative)
        N_rhs, tail_rhs = NumberFieldService.theta_series_truncation(1.0 / D, floor, relative)
        N = max(N_trunc, N_lhs, N_rhs)

        lhs = NumberFieldService.theta_value(data, 1.0, N)
        rhs = NumberFieldService.theta_value(data, 1.0 / D, N) / math.sqrt(D)
        abs_err = abs(lhs - rhs)
        return {
            "D": D,
            "h": data.h,
            "w": data.w,
            "truncation": N,
            "tail_bound": max(tail_lhs, tail_rhs),
            "lhs": lhs,
            "rhs": rhs,
            "abs_err": abs_err,
            "ok": abs_err < config.TOLERANCES['residue_identity'],
        }

    # ------------------------------------------------------------------
    # 데데킨트 제타
    # ------------------------------------------------------------------

    @staticmethod
    def dirichlet_l(D: int, s) -> complex:
        """L(s, χ_{-D}) = D^{-s}·Σ_{a=1}^{D} χ(a)·ζ(s, a/D) (Hurwitz)"""
        chi = NumberFieldService.character_table(D, D)
        with mpmath.workdps(30):
            total = mpmath.mpf(0)
            for a in range(1, D + 1):
                if chi[a - 1]:
                    total += int(chi[a - 1]) * mpmath.zeta(s, mpmath.mpf(a) / D)
            return complex(mpmath.power(D, -s) * total)

    @staticmethod
    def dedekind_xi(D: int, s) -> complex:
        """
        ξ_K(s) = (2π)^{-s}·Γ(s)·ζ(s)·L(s, χ_{-D}) = G₂(s)/(2π)·ζ_K(s)

        Raises:
            PoleError: s ∈ {0, 1}
        """
        NumberFieldService.require_fundamental(D)
        if s in (0, 1):
            raise PoleError(f"xi_K has a pole at s = {s}")
        gamma_term = CompletedZetaTerm("complex", 1)
        with mpmath.workdps(30):
            zeta_k = mpmath.zeta(s) * NumberFieldService.dirichlet_l(D, s)
            return complex(gamma_term.factor(s) / (2 * mpmath.pi) * zeta_k)

    @staticmethod
    def dedekind_functional_equation_check(D: int, s) -> Dict[str, Any]:
        """ξ_K(s) = D^{1/2-s}·ξ_K(1-s) (상대 오차)"""
        lhs = NumberFieldService.dedekind_xi(D, s)
        rhs = complex(mpmath.power(D, 0.5 - s)) * NumberFieldService.dedekind_xi(D, 1 - s)
        error = abs(lhs - rhs) / abs(lhs)
        return {"D": D, "s": s, "lhs": lhs, "rhs": rhs, "relative_error": error,
                "ok": error < config.TOLERANCES['dedekind']}

    @staticmethod
    def dedekind_residues(D: int) -> Dict[str, Any]:
        """
        res_{s=1}ξ_K = h/(w√D), res_{s=0}ξ_K = -h/w

        L(1,χ) = -(1/D)·Σ χ(a)ψ(a/D), L(0,χ) = -(1/D)·Σ a·χ(a), ζ(0) = -1/2
        """
        data = NumberFieldService.field_data(D)
        chi = NumberFieldService.character_table(D, D)
        with mpmath.workdps(30):
            L1 = -sum(int(chi[a - 1]) * mpmath.digamma(mpmath.mpf(a) / D) for a in range(1, D + 1)) / D
            L0 = -mpmath.mpf(sum(a * int(chi[a - 1]) for a in range(1, D + 1))) / D
            res1 = float(L1 / (2 * mpmath.pi))
            res0 = float(-L0 / 2)
        expected1 = data.h / (data.w * math.sqrt(D))
        expected0 = -data.h / data.w
        tolerance = config.TOLERANCES['dedekind']
        ok = abs(res1 - expected1) < tolerance and abs(res0 - expected0) < tolerance
        return {
            "D": D,
            "res1": res1,
            "res1_expected": expected1,
            "res0": res0,
            "res0_expected": expected0,
            "ok": ok,
        }
