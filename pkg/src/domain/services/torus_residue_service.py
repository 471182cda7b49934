# -*- coding: utf-8 -*-
"""TorusResidueService - Mellin 변환, 원환면 푸리에 변환, 대합 i(z) = q⁻¹z⁻¹, 유수 계산"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

from ..entities.graded_function import GradedFunction
from ..entities.residue_report import RESIDUE_POINTS, ResidueReport
from ..entities.torus_rational import TorusRational
from ..entities.zeta_data import ZetaData
from ..exceptions import InvalidArgument, NotInSpace
from ..value_objects.half_power_scalar import HalfPowerScalar
from ..value_objects.laurent_polynomial import LaurentPolynomial

logger = logging.getLogger(__name__)

ONE_MINUS_Z = LaurentPolynomial.from_ascending([1, -1])


def _one_minus_qz(q: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_ascending([1, -q])


def _denominator_series(j: int, e1: int, e2: int, q: Optional[int]) -> Fraction:
    """[z^j] 1/((1-z)^{e1}(1-qz)^{e2}), j ≥ 0"""
    if e1 and e2:
        return Fraction(q ** (j + 1) - 1, q - 1)
    if e1:
        return Fraction(1)
    if e2:
        return Fraction(q) ** j
    return Fraction(1 if j == 0 else 0)


def _infinity_series(j: int, e1: int, e2: int, q: Optional[int]) -> Fraction:
    """[w^j] (-w)^{e1}(-w/q)^{e2} / ((1-w)^{e1}(1-w/q)^{e2}), j ≥ 0 (w = 1/z)"""
    if e1 and e2:
        return sum((Fraction(q) ** -b for b in range(1, j)), Fraction(0))
    if e1:
        return Fraction(-1 if j >= 1 else 0)
    if e2:
        return -Fraction(q) ** -j if j >= 1 else Fraction(0)
    return Fraction(1 if j == 0 else 0)


class TorusResidueService:
    """원환면 유리함수 공간 위의 변환과 유수 계산 도메인 서비스

    모든 계산은 ℚ(√q) 위에서 정확합니다.
    """

    # ------------------------------------------------------------------
    # Mellin 변환
    # ------------------------------------------------------------------

    @staticmethod
    def mellin(f: GradedFunction) -> TorusRational:
        """
        Mf(z) = Σ f(n) z^n

        n ≥ T 의 꼬리 a·q^n + b 는 b·z^T/(1-z) + a·q^T·z^T/(1-qz) 로 합산합니다.

        Examples:
            >>> TorusResidueService.mellin(GradedFunction.step(0))
            TorusRational(LaurentPolynomial(1), e1=1, e2=0, q=None)
        """
        T = f.threshold
        finite = LaurentPolynomial(f.support)
        e1 = 0 if f.tail_b.is_zero() else 1
        e2 = 1 if f.has_geometric_tail() else 0
        q = f.q

        numerator = finite
        if e1:
            numerator = numerator * ONE_MINUS_Z
        if e2:
            numerator = numerator * _one_minus_qz(q)
        if e1:
            tail_b = LaurentPolynomial.monomial(T, f.tail_b)
            numerator = numerator + (tail_b * _one_minus_qz(q) if e2 else tail_b)
        if e2:
            tail_a = LaurentPolynomial.monomial(T, f.tail_a * Fraction(q) ** T)
            numerator = numerator + (tail_a * ONE_MINUS_Z if e1 else tail_a)
        return TorusRational(numerator, e1, e2, q)

    @staticmethod
    def mellin_inverse(R: TorusRational) -> GradedFunction:
        """
        부분분수 재전개로 Mellin 역변환

        c1 = ((1-z)R)(1), c2 = ((1-qz)R)(1/q) 를 떼어 내고 남는 로랑 다항식 L 에 대해
        f(n) = L_n + [n ≥ 0]·(c1 + c2·q^n). 결과는 R을 포함하는 가장 작은 공간에 속합니다.
        """
        q = R.q
        c1 = HalfPowerScalar.zero()
        c2 = HalfPowerScalar.zero()
        remainder = R.numerator
        if R.e1:
            c1 = R.numerator.evaluate(1)
            if R.e2:
                c1 = c1 / (1 - q)
        if R.e2:
            c2 = R.numerator.evaluate(Fraction(1, q))
            if R.e1:
                c2 = c2 / (1 - Fraction(1, q))

        # N - c1·(1-qz)^{e2} - c2·(1-z)^{e1} 는 분모로 나누어떨어짐
        if R.e1:
            remainder = remainder - (_one_minus_qz(q) * c1 if R.e2 else LaurentPolynomial.monomial(0, c1))
        if R.e2:
            remainder = remainder - (ONE_MINUS_Z * c2 if R.e1 else LaurentPolynomial.monomial(0, c2))
        laurent = remainder
        if R.e1:
            laurent, rest = laurent.divide_one_minus(1)
            assert rest.is_zero()
        if R.e2:
            laurent, rest = laurent.divide_one_minus(q)
            assert rest.is_zero()

        upper = laurent.max_degree if laurent.max_degree is not None else -1
        threshold = max(0, upper + 1)
        low = min(0, laurent.min_degree if laurent.min_degree is not None else 0)
        values = {}
        for n in range(low, threshold):
            value = laurent.coefficient(n)
            if n >= 0:
                value = value + c1 + (c2 * Fraction(q) ** n if R.e2 else 0)
            values[n] = value

        if R.e2:
            return GradedFunction.eventually_geometric(values, threshold, c2, c1, q)
        if R.e1:
            return GradedFunction.eventually_constant(values, threshold, c1)
        return GradedFunction.finite({n: c for n, c in values.items() if not c.is_zero()})

    # ------------------------------------------------------------------
    # 푸리에 변환 / 대합
    # ------------------------------------------------------------------

    @staticmethod
    def torus_fourier_local(R: TorusRational, q_x: int, k_x: int) -> TorusRational:
        """
        F_x(f)(z) = q_x^{-k/2}·z^{-k}·(1 - q_x⁻¹z⁻¹)(1 - z)⁻¹·f(q_x⁻¹z⁻¹)

        Raises:
            NotInSpace: R이 ℂ₊ 상이 아님 (z = 1/q 극)
        """
        if R.e2:
            raise NotInSpace("local Fourier transform is defined on C_+ (no pole at 1/q)")
        substituted = R.numerator.substitute_scaled_inverse(q_x)
        if not R.e1:
            # (1 - q⁻¹z⁻¹) 인수가 남음
            substituted = substituted * LaurentPolynomial.from_mapping({0: 1, -1: -Fraction(1, q_x)})
        numerator = substituted.shift(-k_x) * HalfPowerScalar.sqrt_power(q_x, -k_x)
        return TorusRational(numerator, 1, 0, R.q)

    @staticmethod
    def involution_pullback(R: TorusRational, q: Optional[int] = None) -> TorusRational:
        """
        i*R(z) = R(q⁻¹z⁻¹)

        1/(1 - q⁻¹z⁻¹) = -qz/(1 - qz), 1/(1 - z⁻¹) = -z/(1 - z) 이므로
        극 플래그가 서로 바뀝니다.

        Examples:
            >>> TorusResidueService.involution_pullback(TorusRational.monomial(1, 1, 2))
            TorusRational(LaurentPolynomial(1/2·z^-1), e1=0, e2=0, q=2)
        """
        q = q if q is not None else R.q
        if q is None:
            raise InvalidArgument("involution needs q")
        numerator = R.numerator.substitute_scaled_inverse(q)
        if R.e1:
            numerator = numerator * LaurentPolynomial.monomial(1, -q)
        if R.e2:
            numerator = numerator * LaurentPolynomial.monomial(1, -1)
        return TorusRational(numerator, R.e2, R.e1, q)

    @staticmethod
    def standard_global(z: ZetaData, d: int) -> TorusRational:
        """F_D(z) = z^d·P(z)/((1-z)(1-qz))"""
        numerator = LaurentPolynomial.from_ascending(z.coefficients, d)
        return TorusRational(numerator, 1, 1, z.q)

    # ------------------------------------------------------------------
    # 유수
    # ------------------------------------------------------------------

    @staticmethod
    def residue_at(R: TorusRational, point: str) -> HalfPowerScalar:
        """
        R·dz/z 의 유수

        Args:
            R: 정규형 유리함수 (극 차수 ≤ 1)
            point: "0" | "1" | "q_inv" | "infinity"

        Raises:
            InvalidArgument: 알 수 없는 점
        """
        q, e1, e2 = R.q, R.e1, R.e2
        N = R.numerator
        if point == "0":
            total = HalfPowerScalar.zero()
            for k, c in N:
                if k <= 0:
                    total = total + c * _denominator_series(-k, e1, e2, q)
            return total
        if point == "1":
            if not e1:
                return HalfPowerScalar.zero()
            value = N.evaluate(1)
            # (1 - z) = -(z - 1)
            return -(value / (1 - q) if e2 else value)
        if point == "q_inv":
            if not e2:
                return HalfPowerScalar.zero()
            value = N.evaluate(Fraction(1, q))
            return -(value / (1 - Fraction(1, q)) if e1 else value)
        if point == "infinity":
            total = HalfPowerScalar.zero()
            for k, c in N:
                if k >= 0:
                    total = total + c * _infinity_series(k, e1, e2, q)
            return -total
        raise InvalidArgument(f"unknown residue point {point!r}; expected one of {RESIDUE_POINTS}")

    @staticmethod
    def residue_report(R: TorusRational) -> ResidueReport:
        return ResidueReport(tuple(
            (point, TorusResidueService.residue_at(R, point)) for point in RESIDUE_POINTS
        ))

    @staticmethod
    def poisson_residue_check(z: ZetaData, d: int, shift: int = 0) -> Dict[str, Any]:
        """
        유수 형태의 Poisson 공식

        res₀(zⁿ f̃ω) + res₁(f̃ω) = q^{-n}·[res₀(z^{-n} i*f̃ ω) + res₁(i*f̃ ω)],  f̃ = F_D, ω = dz/z

        이동된 시험 함수의 푸리에 변환이 q^{-n} 인수를 가지므로 n ≠ 0 에서 이 인수가 붙습니다.

        Returns:
            {"d", "shift", "lhs_pair", "rhs_pair", "rhs_factor", "ok"}
        """
        q = z.q
        f = TorusResidueService.standard_global(z, d)
        pulled = TorusResidueService.involution_pullback(f)
        lhs_pair = (
            TorusResidueService.residue_at(f.shift(shift), "0"),
            TorusResidueService.residue_at(f, "1"),
        )
        rhs_pair = (
            TorusResidueService.residue_at(pulled.shift(-shift), "0"),
            TorusResidueService.residue_at(pulled, "1"),
        )
        factor = Fraction(q) ** -shift
        ok = lhs_pair[0] + lhs_pair[1] == (rhs_pair[0] + rhs_pair[1]) * factor
        logger.debug(f"poisson_residue_check d={d} shift={shift}: {lhs_pair} vs {rhs_pair}·{factor} ok={ok}")
        return {
            "d": d,
            "shift": shift,
            "lhs_pair": lhs_pair,
            "rhs_pair": rhs_pair,
            "rhs_factor": factor,
            "ok": ok,
        }

    @staticmethod
    def involution_residue_check(R: TorusRational) -> Dict[str, Any]:
        """
        res_P(η) = res_{i(P)}(i*η), η = R·dz/z

        i*(dz/z) = -dz/z 이므로 i*η = -(i*R)·dz/z 입니다.
        """
        pulled = TorusResidueService.involution_pullback(R)
        image = {"0": "infinity", "1": "q_inv", "q_inv": "1", "infinity": "0"}
        pairs = {}
        ok = True
        for point in RESIDUE_POINTS:
            before = TorusResidueService.residue_at(R, point)
            after = -TorusResidueService.residue_at(pulled, image[point])
            pairs[point] = (before, after)
            ok = ok and before == after
        return {"pairs": pairs, "ok": ok}
