# -*- coding: utf-8 -*-
"""ZetaService - 분자 P(t) 적합, 함수방정식, 유수, 주부분 분해, Tate–Iwasawa 분해"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Sequence

import mpmath
import sympy
from sympy import Poly, QQ, Rational, Symbol, ZZ

import config
from ..entities.zeta_data import ZetaData
from ..exceptions import CountsInconsistent, InvalidArgument, PoleError
from ..value_objects.residue_value import ResidueValue

logger = logging.getLogger(__name__)


def newton_power_sums(coefficients: Sequence, n_max: int) -> List[Fraction]:
    """
    Newton 항등식으로 역근 거듭제곱 합 계산

    P(t) = Π(1 - λ_j t) = Σ c_k t^k (c_0 = 1) 에 대해
    s_n = -n·c_n - Σ_{k=1}^{n-1} c_k·s_{n-k}

    Args:
        coefficients: c_0..c_d (c_0 = 1)
        n_max: 최대 n

    Returns:
        [s_0, s_1, ..., s_{n_max}] (s_0 = d)

    Examples:
        >>> newton_power_sums([1, 0, 2], 2)
        [Fraction(2, 1), Fraction(0, 1), Fraction(-4, 1)]
    """
    c = [Fraction(x) for x in coefficients]
    degree = len(c) - 1

    def coeff(k: int) -> Fraction:
        return c[k] if k <= degree else Fraction(0)

    sums = [Fraction(degree)]
    for n in range(1, n_max + 1):
        value = -n * coeff(n) - sum(coeff(k) * sums[n - k] for k in range(1, n))
        sums.append(value)
    return sums


def _fraction(value) -> Fraction:
    """sympy Rational → Fraction"""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class ZetaService:
    """곡선 제타 함수 Z_C(t) = P(t)/((1-t)(1-qt)) 에 관한 도메인 서비스

    P의 계수에서 나오는 모든 항등식은 정확한 유리수로 검사하며,
    부동소수점 근은 |λ| 보고에만 사용합니다.
    """

    # ------------------------------------------------------------------
    # 적합
    # ------------------------------------------------------------------

    @staticmethod
    def fit_numerator(q: int, g: int, counts: Mapping[int, int]) -> ZetaData:
        """
        N_1..N_{2g}로부터 P(t) 적합

        log Z = Σ N_m t^m / m 를 2g차까지 지수화한 뒤 (1-t)(1-qt)를 곱합니다.

        Args:
            q: 계수체 크기
            g: 종수
            counts: m ↦ N_m (1 ≤ m ≤ 2g 필요)

        Returns:
            ZetaData

        Raises:
            InvalidArgument: 필요한 N_m 누락
            CountsInconsistent: 정수가 아닌 계수 또는 P(1) < 1

        Examples:
            >>> ZetaService.fit_numerator(2, 1, {1: 3, 2: 9}).coefficients
            (1, 0, 2)
        """
        order = 2 * g
        missing = [m for m in range(1, order + 1) if m not in counts]
        if missing:
            raise InvalidArgument(f"fit_numerator needs N_1..N_{order}, missing {missing}")

        log_series = [Fraction(0)] + [Fraction(counts[m], m) for m in range(1, order + 1)]

        # exp: n·E_n = Σ_{k=1}^n k·L_k·E_{n-k}
        exp_series = [Fraction(1)]
        for n in range(1, order + 1):
            total = sum(k * log_series[k] * exp_series[n - k] for k in range(1, n + 1))
            exp_series.append(total / n)

        factor = [Fraction(1), Fraction(-(1 + q)), Fraction(q)]
        numerator = []
        for n in range(order + 1):
            numerator.append(sum(factor[j] * exp_series[n - j] for j in range(3) if n - j >= 0))

        non_integral = [(i, c) for i, c in enumerate(numerator) if c.denominator != 1]
        if non_integral:
            raise CountsInconsistent(f"fitted numerator has non-integer coefficients {non_integral}")

        try:
            zeta = ZetaData(q=q, g=g, coefficients=tuple(int(c) for c in numerator))
        except InvalidArgument as e:
            raise CountsInconsistent(f"fitted numerator is not a valid zeta numerator: {e}") from e
        logger.debug(f"fit_numerator q={q} g={g} -> {zeta!r}")
        return zeta

    # ------------------------------------------------------------------
    # 함수방정식 / 리만 가설
    # ------------------------------------------------------------------

    @staticmethod
    def inverse_roots(z: ZetaData) -> List[complex]:
        """
        P의 역근 λ_j (중근은 중복도만큼 반복)

        중근의 수치 정밀도를 위해 정수 계수 위에서 무제곱 분해한 뒤
        각 인수의 근을 고정밀로 구합니다.
        """
        if z.g == 0:
            return []
        t = Symbol('t')
        poly = Poly(list(reversed(z.coefficients)), t, domain=ZZ)
        _, factors = sympy.sqf_list(poly)
        roots: List[complex] = []
        for factor, multiplicity in factors:
            if factor.degree() < 1:
                continue
            for root in factor.nroots(n=30, maxsteps=200):
                inverse = 1 / complex(root)
                roots.extend([inverse] * multiplicity)
        return roots

    @staticmethod
    def functional_equation_check(z: ZetaData) -> Dict[str, Any]:
        """
        계수 대칭 a_{2g-i} = q^{g-i}·a_i 와 |λ| = √q 검사

        Returns:
            {"symmetric", "root_moduli", "max_deviation", "riemann_hypothesis"}

        Examples:
            >>> ZetaService.functional_equation_check(ZetaData(2, 1, (1, 0, 2)))["symmetric"]
            True
        """
        g, q = z.g, z.q
        a = z.coefficients
        # i ≤ g 쪽에서 검사하면 q^{g-i}가 정수
        symmetric = all(a[2 * g - i] == q ** (g - i) * a[i] for i in range(g + 1))

        moduli = sorted(abs(root) for root in ZetaService.inverse_roots(z))
        sqrt_q = q ** 0.5
        deviation = max((abs(m - sqrt_q) for m in moduli), default=0.0)
        report = {
            "symmetric": symmetric,
            "root_moduli": moduli,
            "max_deviation": deviation,
            "riemann_hypothesis": deviation < config.TOLERANCES['root_modulus'],
        }
        logger.debug(f"functional_equation_check {z!r}: symmetric={symmetric}, max dev={deviation:.3e}")
        return report

    # ------------------------------------------------------------------
    # 유수 / 급수
    # ------------------------------------------------------------------

    @staticmethod
    def class_number_and_residues(z: ZetaData):
        """
        h = P(1), res_{s=0} = -h/(q-1)·ln⁻¹q, res_{s=1} = q^{1-g}h/(q-1)·ln⁻¹q

        Returns:
            (h, res0, res1)

        Examples:
            >>> h, r0, r1 = ZetaService.class_number_and_residues(ZetaData(2, 0, (1,)))
            >>> h, r0.coeff, r1.coeff
            (1, Fraction(-1, 1), Fraction(2, 1))
        """
        h = z.class_number
        q = z.q
        res0 = ResidueValue(Fraction(-h, q - 1), q)
        res1 = ResidueValue(Fraction(q) ** (1 - z.g) * Fraction(h, q - 1), q)
        return h, res0, res1

    @staticmethod
    def series_coefficients(z: ZetaData, n_max: int) -> List[int]:
        """
        P(t)/((1-t)(1-qt)) 의 멱급수 계수 b_0..b_{n_max}

        Examples:
            >>> ZetaService.series_coefficients(ZetaData(2, 0, (1,)), 3)
            [1, 3, 7, 15]
        """
        if n_max < 0:
            raise InvalidArgument(f"n_max must be >= 0, got {n_max}")
        q = z.q
        # 1/((1-t)(1-qt)) = Σ (q^{n+1}-1)/(q-1) t^n
        base = [(q ** (n + 1) - 1) // (q - 1) for n in range(n_max + 1)]
        return [
            sum(z.coefficient(i) * base[n - i] for i in range(min(n, 2 * z.g) + 1))
            for n in range(n_max + 1)
        ]

    @staticmethod
    def riemann_roch_tail(z: ZetaData, n: int) -> Fraction:
        """n ≥ 2g-1 에서 b_n = h·(q^{n+1-g} - 1)/(q-1)"""
        return Fraction(z.class_number) * (Fraction(z.q) ** (n + 1 - z.g) - 1) / (z.q - 1)

    @staticmethod
    def predict_count(z: ZetaData, m: int) -> int:
        """
        N_m = 1 + q^m - s_m (s_m은 Newton 항등식으로 정확히 계산)

        Examples:
            >>> ZetaService.predict_count(ZetaData(2, 1, (1, 0, 2)), 2)
            9
        """
        if m < 1:
            raise InvalidArgument(f"m must be >= 1, got {m}")
        s_m = newton_power_sums(z.coefficients, m)[m]
        return int(1 + z.q ** m - s_m)

    # ------------------------------------------------------------------
    # 주부분 분해
    # ------------------------------------------------------------------

    @staticmethod
    def principal_parts_check(z: ZetaData) -> Dict[str, Any]:
        """
        E(t) = Z(t) - [-h/((q-1)(1-t)) + q^{1-g}h/((q-1)(1-qt))] 가 차수 ≤ 2g-2 다항식인지 검사

        공통분모 (1-t)(1-qt) 위에서 분자를 만든 뒤 정확한 다항식 나눗셈을 합니다.

        Returns:
            {"entire_part": [E의 계수 (오름차순, 유리수)], "remainder_zero": bool, "ok": bool}
        """
        t = Symbol('t')
        q = Rational(z.q)
        h = Rational(z.class_number)
        g = z.g

        P = Poly(sum(Rational(c) * t ** i for i, c in enumerate(z.coefficients)), t, domain=QQ)
        bracket = Poly(-h / (q - 1) * (1 - q * t) + q ** (1 - g) * h / (q - 1) * (1 - t), t, domain=QQ)
        denominator = Poly((1 - t) * (1 - q * t), t, domain=QQ)
        quotient, remainder = (P - bracket).div(denominator)

        remainder_zero = remainder.is_zero
        if quotient.is_zero:
            entire = [Fraction(0)]
            degree_ok = True
        else:
            entire = [_fraction(c) for c in reversed(quotient.all_coeffs())]
            degree_ok = quotient.degree() <= max(2 * g - 2, 0)
        ok = bool(remainder_zero and degree_ok)
        logger.debug(f"principal_parts_check {z!r}: E={entire}, ok={ok}")
        return {"entire_part": entire, "remainder_zero": bool(remainder_zero), "ok": ok}

    # ------------------------------------------------------------------
    # Tate–Iwasawa 정칙화 분해
    # ------------------------------------------------------------------

    @staticmethod
    def tate_iwasawa_decomposition(z: ZetaData, N: int) -> Dict[str, Any]:
        """
        상자 절단 φ = 1_{|n| ≤ N} 에 대한 네 항 분해

        T_lhs = Σ b_n t^n,  T1 = ½b_0,
        T2 = q^{1-g}(½b_{2g-2} + Σ b_{2g-2-m} q^m t^m),
        T3 = q^{1-g}·h/(q-1)·(½ + Σ (qt)^m),  T4 = -h/(q-1)·(½ + Σ t^m)

        Args:
            z: ZetaData
            N: 절단 (≥ 2g)

        Returns:
            {"N", "lhs", "T1", "T2", "T3", "T4", "ok"} (각 항은 t⁰..t^N 계수 목록)

        Raises:
            InvalidArgument: N < 2g
        """
        g, q = z.g, z.q
        if N < 2 * g:
            raise InvalidArgument(f"truncation N must be >= 2g = {2 * g}, got {N}")

        b = ZetaService.series_coefficients(z, N)

        def b_at(n: int) -> Fraction:
            return Fraction(b[n]) if 0 <= n <= N else Fraction(0)

        half = Fraction(1, 2)
        scale = Fraction(q) ** (1 - g)
        mass = Fraction(z.class_number, q - 1)
        canonical = 2 * g - 2

        lhs = [Fraction(x) for x in b]
        t1 = [half * b_at(0)] + [Fraction(0)] * N
        t2 = [scale * half * b_at(canonical)] + [scale * b_at(canonical - m) * q ** m for m in range(1, N + 1)]
        t3 = [scale * mass * half] + [scale * mass * q ** m for m in range(1, N + 1)]
        t4 = [-mass * half] + [-mass for _ in range(1, N + 1)]

        ok = all(lhs[n] == t1[n] + t2[n] + t3[n] + t4[n] for n in range(N + 1))
        logger.debug(f"tate_iwasawa_decomposition {z!r} N={N}: ok={ok}")
        return {"N": N, "lhs": lhs, "T1": t1, "T2": t2, "T3": t3, "T4": t4, "ok": ok}

    # ------------------------------------------------------------------
    # 수치 검사
    # ------------------------------------------------------------------

    @staticmethod
    def zeta_value(z: ZetaData, s: complex) -> complex:
        """
        ζ_C(s) = Z_C(q^{-s})

        Raises:
            PoleError: q^{-s} ∈ {1, 1/q}
        """
        with mpmath.workdps(30):
            t = mpmath.power(z.q, -mpmath.mpmathify(s))
            denominator = (1 - t) * (1 - z.q * t)
            if abs(denominator) < mpmath.mpf(10) ** -25:
                raise PoleError(f"zeta_C has a pole at s = {s}")
            numerator = mpmath.polyval(list(reversed(z.coefficients)), t)
            return complex(numerator / denominator)

    @staticmethod
    def functional_equation_numeric(z: ZetaData, s: complex) -> Dict[str, Any]:
        """
        ζ_C(s) = q^{g-1}·q^{-s(2g-2)}·ζ_C(1-s) 수치 검사 (상대 오차)
        """
        lhs = ZetaService.zeta_value(z, s)
        rhs_zeta = ZetaService.zeta_value(z, 1 - s)
        factor = complex(mpmath.power(z.q, z.g - 1) * mpmath.power(z.q, -mpmath.mpmathify(s) * (2 * z.g - 2)))
        rhs = factor * rhs_zeta
        error = abs(lhs - rhs) / max(abs(lhs), 1e-300)
        tolerance = config.TOLERANCES['zeta_numeric']
        return {"s": s, "lhs": lhs, "rhs": rhs, "relative_error": error, "ok": error < tolerance}

    @staticmethod
    def laurent_residue_crosscheck(z: ZetaData) -> Dict[str, Any]:
        """
        Z(t)의 t = 1, t = 1/q 유수를 기호 계산으로 구해 s-평면 유수와 비교

        t = q^{-s} 근처에서 dt = -t·ln q·ds 이므로
        res_{s=0} ζ_C = -R_1/ln q, res_{s=1} ζ_C = -q·R_{1/q}/ln q
        """
        t = Symbol('t')
        q = Rational(z.q)
        Z = sum(Rational(c) * t ** i for i, c in enumerate(z.coefficients)) / ((1 - t) * (1 - q * t))
        r_one = sympy.residue(Z, t, 1)
        r_inverse = sympy.residue(Z, t, 1 / q)
        symbolic0 = -_fraction(sympy.Rational(r_one))
        symbolic1 = -z.q * _fraction(sympy.Rational(r_inverse))

        _, res0, res1 = ZetaService.class_number_and_residues(z)
        ok = symbolic0 == res0.coeff and symbolic1 == res1.coeff
        return {
            "res0_symbolic": symbolic0,
            "res1_symbolic": symbolic1,
            "res0": res0.coeff,
            "res1": res1.coeff,
            "ok": ok,
        }
