# -*- coding: utf-8 -*-
"""GradedSpaceService - D(ℤ), D₊(ℤ), D₊₊(ℤ) 위의 합성곱, 국소/대역 푸리에 변환, 차수 pushforward"""

import logging
from fractions import Fraction

from ..entities.graded_function import GradedFunction
from ..entities.zeta_data import ZetaData
from ..exceptions import SpaceMismatch
from ..value_objects.half_power_scalar import HalfPowerScalar
from .torus_residue_service import TorusResidueService
from .zeta_service import ZetaService

logger = logging.getLogger(__name__)


class GradedSpaceService:
    """차수 격자 ℤ 위 함수 공간의 연산을 담당하는 도메인 서비스"""

    @staticmethod
    def local_fourier(f: GradedFunction, q_x: int, k_x: int) -> GradedFunction:
        """
        국소 푸리에 변환 F_x(δ_{(≥m)}) = q_x^{-k/2 - m}·δ_{(≥ -k - m)}

        f = Σ c_m δ_{(≥m)} (c_m = f(m) - f(m-1)) 로 분해한 뒤 선형으로 확장합니다.

        Args:
            f: D_plus 함수 (유한 지지 함수 포함)
            q_x: 국소 잉여체 크기
            k_x: 미분 형식의 값매김 ν_x(ω)

        Raises:
            SpaceMismatch: 기하 꼬리가 있는 경우

        Examples:
            >>> GradedSpaceService.local_fourier(GradedFunction.step(0), 3, 2)
            GradedFunction(D_plus, {}, n>=-2: HalfPowerScalar(1/3))
        """
        if f.has_geometric_tail():
            raise SpaceMismatch(f"local Fourier transform needs D_plus, got {f.space} with a geometric tail")
        steps = {}
        for m, c in f.step_coefficients().items():
            start = -k_x - m
            steps[start] = steps.get(start, HalfPowerScalar.zero()) + c * HalfPowerScalar.sqrt_power(q_x, -k_x - 2 * m)
        return GradedFunction.from_steps(steps)

    @staticmethod
    def convolve(f: GradedFunction, g: GradedFunction) -> GradedFunction:
        """
        (f*g)(n) = Σ_m f(m)·g(n - m)

        f는 유한 지지이므로 모든 합이 유한합니다.
        꼬리: b' = b·Σf(m), a' = a·Σ f(m)q^{-m}

        Raises:
            SpaceMismatch: f가 D에 속하지 않음
        """
        if f.has_tail():
            raise SpaceMismatch(f"left convolution factor must be finitely supported, got {f!r}")
        if not f.support:
            return GradedFunction.finite({})

        f_values = f.support_values()
        mass = HalfPowerScalar.zero()
        geometric_mass = HalfPowerScalar.zero()
        for m, c in f_values.items():
            mass = mass + c
            if g.has_geometric_tail():
                geometric_mass = geometric_mass + c * Fraction(g.q) ** -m

        threshold = max(f_values) + g.threshold
        low = min(f_values) + g.lower_cutoff
        values = {}
        for n in range(low, threshold):
            total = HalfPowerScalar.zero()
            for m, c in f_values.items():
                total = total + c * g(n - m)
            values[n] = total

        if g.has_geometric_tail():
            return GradedFunction.eventually_geometric(
                values, threshold, g.tail_a * geometric_mass, g.tail_b * mass, g.q)
        if not g.has_tail():
            return GradedFunction.finite({n: c for n, c in values.items() if not c.is_zero()})
        return GradedFunction.eventually_constant(values, threshold, g.tail_b * mass)

    @staticmethod
    def graded_fourier_pp(f: GradedFunction, q: int) -> GradedFunction:
        """
        대역 푸리에 변환 F = M⁻¹ ∘ i* ∘ M

        유한 지지 함수에서는 (Ff)(n) = q^n·f(-n) 과 같습니다.

        Examples:
            >>> GradedSpaceService.graded_fourier_pp(GradedFunction.delta(1), 2)
            GradedFunction(D, {-1: HalfPowerScalar(1/2)})
        """
        if f.has_geometric_tail() and f.q != q:
            raise SpaceMismatch(f"tail base {f.q} does not match q={q}")
        R = TorusResidueService.mellin(f)
        pulled = TorusResidueService.involution_pullback(R, q)
        result = TorusResidueService.mellin_inverse(pulled)
        logger.debug(f"graded_fourier_pp {f!r} -> {result!r}")
        return result

    @staticmethod
    def pushforward_standard(z: ZetaData, d: int) -> GradedFunction:
        """
        n ↦ b_{n-d} (표준 함수 f_D의 차수 pushforward)

        n - d ≥ 2g - 1 에서 b_{n-d} = h/(q-1)·(q^{n-d+1-g} - 1) 이므로
        꼬리는 (a, b) = (h·q^{1-g-d}/(q-1), -h/(q-1)) 입니다.
        """
        q, g = z.q, z.g
        head = max(2 * g - 1, 0)
        b = ZetaService.series_coefficients(z, head)
        values = {d + n: b[n] for n in range(head)}
        mass = Fraction(z.class_number, q - 1)
        a = mass * Fraction(q) ** (1 - g - d)
        return GradedFunction.eventually_geometric(values, d + head, a, -mass, q)

    @staticmethod
    def tail_functional(f: GradedFunction) -> HalfPowerScalar:
        """
        δ_{(0)}(f) = lim_{n→∞} f(n)

        Raises:
            SpaceMismatch: 기하 꼬리 (극한 없음)
        """
        if f.has_geometric_tail():
            raise SpaceMismatch("tail functional is undefined on a nontrivial D_plus_plus tail")
        return f.tail_b
