# -*- coding: utf-8 -*-
"""ExplicitFormulaService - Weil 명시 공식, 거듭제곱 합, 비분기 Artin 분포, Lefschetz 항등식"""

import logging
import math
from fractions import Fraction
from typing import Any, Dict, Mapping, Sequence

import config
from ..entities.graded_function import GradedFunction
from ..entities.power_sum_table import PowerSumTable
from ..entities.zeta_data import ZetaData
from ..exceptions import InvalidArgument, NeedMoreCounts, SpaceMismatch
from .zeta_service import ZetaService, newton_power_sums

logger = logging.getLogger(__name__)

SIGN_NOTE = (
    "point sum enters with a plus sign: d log Z = +sum_x sum_n deg(x) z^(n deg x) dz/z "
    "has positive coefficients near z = 0"
)


def _rational_values(f: GradedFunction) -> Dict[int, Fraction]:
    """유한 지지 유리수 함수의 값"""
    if f.has_tail():
        raise SpaceMismatch(f"explicit formula needs a finitely supported test function, got {f!r}")
    values = {}
    for n, c in f.support:
        if not c.is_rational():
            raise InvalidArgument(f"test function value f({n}) = {c!r} is not rational")
        values[n] = c.as_fraction()
    return values


class ExplicitFormulaService:
    """곡선에 대한 Weil 명시 공식의 양변을 정확히 계산하는 도메인 서비스"""

    @staticmethod
    def power_sums(z: ZetaData, n_max: int) -> PowerSumTable:
        """
        s_{±n} (0 ≤ n ≤ n_max)

        s_n은 P에서, s_{-n}은 최고차 계수로 정규화한 역다항식
        Q(t) = t^{2g}P(1/t)/a_{2g} 에서 Newton 항등식으로 계산합니다.

        Raises:
            InvalidArgument: n_max < 1 또는 a_{2g} = 0

        Examples:
            >>> table = ExplicitFormulaService.power_sums(ZetaData(2, 1, (1, 0, 2)), 2)
            >>> table.s(2), table.s(-2)
            (Fraction(-4, 1), Fraction(-1, 1))
        """
        if n_max < 1:
            raise InvalidArgument(f"n_max must be >= 1, got {n_max}")
        coefficients = z.coefficients
        positive = newton_power_sums(coefficients, n_max)
        if z.g == 0:
            negative = [Fraction(0)] * (n_max + 1)
        else:
            leading = coefficients[-1]
            if leading == 0:
                raise InvalidArgument("P has a vanishing top coefficient; inverse power sums are undefined")
            reciprocal = [Fraction(c, leading) for c in reversed(coefficients)]
            negative = newton_power_sums(reciprocal, n_max)
        return PowerSumTable(z.q, coefficients, tuple(positive), tuple(negative))

    @staticmethod
    def power_sum_numeric_check(z: ZetaData, n_max: int) -> Dict[str, Any]:
        """Newton 항등식 결과를 수치 근의 거듭제곱 합과 비교"""
        table = ExplicitFormulaService.power_sums(z, n_max)
        roots = ZetaService.inverse_roots(z)
        deviation = 0.0
        for n in range(-n_max, n_max + 1):
            numeric = sum(root ** n for root in roots) if roots else 0
            deviation = max(deviation, abs(numeric - float(table.s(n))))
        pairing = all(table.s(-n) == Fraction(z.q) ** -n * table.s(n) for n in range(n_max + 1))
        tolerance = config.TOLERANCES['power_sum_numeric']
        return {
            "n_max": n_max,
            "max_deviation": deviation,
            "pairing": pairing,
            "ok": deviation < tolerance and pairing,
        }

    @staticmethod
    def explicit_formula_sides(f: GradedFunction, z: ZetaData, closed_points: Sequence[int]) -> Dict[str, Any]:
        """
        명시 공식 양변

        lhs = h̃(q⁻¹) - Σ_λ h̃(λ⁻¹) + h̃(1) = Σ f(m)q^{-m} - Σ f(m)s_{-m} + Σ f(m)
        rhs = (2-2g)f(0) + Σ_{l·n ≤ n_max} l·a_l·[f(-nl) + q^{-nl} f(nl)]

        Args:
            f: 유한 지지 유리수 시험 함수
            z: ZetaData
            closed_points: a_1, a_2, ... (인덱스 0이 a_1)

        Returns:
            {"lhs", "rhs", "ok", "sign_note"}

        Raises:
            NeedMoreCounts: 지지 범위만큼 a_l이 없음
        """
        values = _rational_values(f)
        if not values:
            return {"lhs": Fraction(0), "rhs": Fraction(0), "ok": True, "sign_note": SIGN_NOTE}

        q, g = z.q, z.g
        n_max = max(abs(n) for n in values)
        if n_max > len(closed_points):
            raise NeedMoreCounts(f"explicit formula needs a_l for l <= {n_max}, have {len(closed_points)}")

        table = ExplicitFormulaService.power_sums(z, max(n_max, 1))
        lhs = Fraction(0)
        for m, c in values.items():
            lhs += c * Fraction(q) ** -m + c - c * table.s(-m)

        rhs = (2 - 2 * g) * values.get(0, Fraction(0))
        for l in range(1, n_max + 1):
            a_l = closed_points[l - 1]
            if a_l == 0:
                continue
            for n in range(1, n_max // l + 1):
                k = n * l
                rhs += l * a_l * (values.get(-k, Fraction(0)) + Fraction(q) ** -k * values.get(k, Fraction(0)))

        ok = lhs == rhs
        logger.debug(f"explicit formula {f!r}: lhs={lhs} rhs={rhs} ok={ok}")
        return {"lhs": lhs, "rhs": rhs, "ok": ok, "sign_note": SIGN_NOTE}

    @staticmethod
    def artin_unramified(f: GradedFunction, q_x: int) -> Fraction:
        """
        Σ_{n≥1} [f(n) + q_x^n·f(-n)]  (vol(O*) = 1)

        Examples:
            >>> ExplicitFormulaService.artin_unramified(GradedFunction.delta(-3), 3)
            Fraction(27, 1)
        """
        values = _rational_values(f)
        total = Fraction(0)
        for n, c in values.items():
            if n >= 1:
                total += c
            elif n <= -1:
                total += Fraction(q_x) ** (-n) * c
        return total

    @staticmethod
    def lefschetz_check(z: ZetaData, counts: Mapping[int, int]) -> Dict[str, Any]:
        """
        N_m = 1 + q^m - s_m (적합 범위 밖의 m)

        Returns:
            {"entries": [{"m", "observed", "predicted", "ok"}], "ok"}
        """
        if not counts:
            raise NeedMoreCounts("lefschetz_check needs at least one count")
        entries = []
        for m in sorted(counts):
            predicted = ZetaService.predict_count(z, m)
            entries.append({"m": m, "observed": counts[m], "predicted": predicted, "ok": predicted == counts[m]})
        return {"entries": entries, "ok": all(e["ok"] for e in entries)}

    @staticmethod
    def prime_counting_report(closed_points: Sequence[int], q: int, m: int, genus: int = 0) -> Dict[str, Any]:
        """
        소수 정리 보고

        pi_N = Σ_{l≤m} a_l (N = q^m), 원 비율 pi_N·ln N / N, 차수 비율 a_m·m/q^m

        degree_ratio 는 |a_m·m/q^m - 1| ≤ 3g·q^{-m/2} + q^{-m/2+1} 로 검사합니다.

        Raises:
            InvalidArgument: m < 1
            NeedMoreCounts: a_m 없음
        """
        if m < 1:
            raise InvalidArgument(f"m must be >= 1, got {m}")
        if m > len(closed_points):
            raise NeedMoreCounts(f"prime counting up to degree {m} needs a_1..a_{m}")
        N = q ** m
        pi_N = sum(closed_points[:m])
        raw_ratio = pi_N * math.log(N) / N
        degree_ratio = closed_points[m - 1] * m / N
        bound = 3 * genus * q ** (-m / 2) + q ** (-m / 2 + 1)
        return {
            "m": m,
            "N": N,
            "pi_N": pi_N,
            "N_over_lnN": N / math.log(N),
            "raw_ratio": raw_ratio,
            "degree_ratio": degree_ratio,
            "bound": bound,
            "ok": abs(degree_ratio - 1) <= bound,
        }
