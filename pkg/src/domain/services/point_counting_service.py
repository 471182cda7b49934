# -*- coding: utf-8 -*-
"""PointCountingService - 𝔽_{q^m} 유리점 전수 계산"""

import logging
from multiprocessing import Pool
from typing import List, Tuple

import numpy as np

import config
from ..entities.curve_model import CurveModel
from ..value_objects.element_array import ElementArray
from ..value_objects.field_element import FieldElement
from ..value_objects.field_spec import FieldSpec
from .field_arithmetic_service import FieldArithmeticService
from .polynomial_evaluation import embed_all, embed_monomials, homogeneous_value, horner

logger = logging.getLogger(__name__)


def _solutions_per_x(F: ElementArray, H: ElementArray) -> np.ndarray:
    """
    각 x에서 y² + H·y = F 의 해 개수 (0, 1, 2)

    홀수 표수: 1 + χ(H² + 4F)
    표수 2: H = 0이면 1, 아니면 Tr(F/H²) = 0일 때 2, 아니면 0
    """
    spec = F.spec
    if spec.p != 2:
        four = ElementArray.constant(FieldElement.from_prime_field(spec, 4))
        disc = H * H + four * F
        return 1 + disc.quadratic_character()

    h_zero = H.is_zero()
    h_squared = H * H
    # 0의 역원은 Fermat 거듭제곱에서 0이 되며 해당 위치는 h_zero로 덮어씀
    ratio = F * (h_squared ** (spec.q - 2))
    trace = ratio.absolute_trace()
    counts = np.where(trace == 0, 2, 0)
    counts[h_zero] = 1
    return counts


def _count_weierstrass_chunk(curve: CurveModel, big: FieldSpec, f_big, h_big, start: int, stop: int) -> int:
    x = ElementArray.enumerate(big, start, stop)
    F = horner(f_big, x)
    H = horner(h_big, x)
    return int(_solutions_per_x(F, H).sum())


def _count_plane_chunk(curve: CurveModel, big: FieldSpec, monomials_big, start: int, stop: int) -> int:
    """아핀 차트 z = 1에서 x ∈ [start, stop), 모든 y 쌍의 영점 개수"""
    xs = ElementArray.enumerate(big, start, stop)
    ys = ElementArray.enumerate(big)
    X = ElementArray(big, np.repeat(xs.data, big.q, axis=1))
    Y = ElementArray(big, np.tile(ys.data, (1, xs.size)))
    value = homogeneous_value(monomials_big, X, Y, ElementArray.ones(big))
    return int(value.is_zero().sum())


def _count_chunk(task: Tuple) -> int:
    """워커 프로세스 진입점 (pickle 가능한 최상위 함수)"""
    curve, m, start, stop = task
    big, embedding = FieldArithmeticService.extension_of(curve.base, m)
    if curve.kind == "plane":
        return _count_plane_chunk(curve, big, embed_monomials(curve.monomials, embedding), start, stop)
    return _count_weierstrass_chunk(
        curve, big, embed_all(curve.f, embedding), embed_all(curve.h, embedding), start, stop
    )


class PointCountingService:
    """곡선의 유리점 개수 N_m = #C(𝔽_{q^m}) 를 전수 열거로 계산하는 도메인 서비스

    x 범위를 청크로 나누어 벡터화하며, workers > 1이면 청크를 프로세스 풀에 분배합니다.
    청크 결과는 정수 합이므로 스케줄과 무관합니다.
    """

    @staticmethod
    def count_points(curve: CurveModel, m: int, workers: int = 1) -> int:
        """
        𝔽_{q^m} 유리점 개수

        Args:
            curve: 곡선 모델
            m: 확대 차수 (≥ 1)
            workers: 병렬 프로세스 수

        Returns:
            N_m (사영점: 아핀 해 + 무한원점)

        Raises:
            TooLarge: q^m이 상한 초과
        """
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        big, embedding = FieldArithmeticService.extension_of(curve.base, m)

        if curve.is_projective_line():
            # 아핀 직선의 모든 x + 무한원점 1개
            total = big.q + 1
            logger.debug(f"N_{m}({curve.name}) = {total} (projective line)")
            return total

        affine = PointCountingService._affine_count(curve, m, big, workers)
        infinity = PointCountingService._points_at_infinity(curve, big, embedding)
        total = affine + infinity
        logger.debug(f"N_{m}({curve.name}) = {affine} affine + {infinity} at infinity = {total}")
        return total

    # ------------------------------------------------------------------
    # 아핀 부분
    # ------------------------------------------------------------------

    @staticmethod
    def _chunks(curve: CurveModel, big: FieldSpec) -> List[Tuple[int, int]]:
        size = config.COUNT_CHUNK_SIZE
        if curve.kind == "plane":
            # 청크당 (x, y) 쌍 수를 COUNT_CHUNK_SIZE 근처로 유지
            size = max(1, size // big.q)
        return [(start, min(big.q, start + size)) for start in range(0, big.q, size)]

    @staticmethod
    def _affine_count(curve: CurveModel, m: int, big: FieldSpec, workers: int) -> int:
        chunks = PointCountingService._chunks(curve, big)
        tasks = [(curve, m, start, stop) for start, stop in chunks]
        if workers > 1 and len(tasks) > 1:
            logger.info(f"Counting N_{m} over F_{big.q} with {workers} workers ({len(tasks)} chunks)")
            with Pool(processes=workers) as pool:
                return sum(pool.map(_count_chunk, tasks))
        return sum(_count_chunk(task) for task in tasks)

    # ------------------------------------------------------------------
    # 무한원점
    # ------------------------------------------------------------------

    @staticmethod
    def _points_at_infinity(curve: CurveModel, big: FieldSpec, embedding) -> int:
        if curve.kind == "plane":
            monomials = embed_monomials(curve.monomials, embedding)
            zero = ElementArray.zeros(big)
            xs = ElementArray.enumerate(big)
            # [x : 1 : 0]
            on_line = int(homogeneous_value(monomials, xs, ElementArray.ones(big), zero).is_zero().sum())
            # [1 : 0 : 0]
            corner = int(homogeneous_value(monomials, ElementArray.ones(big), zero, zero).is_zero().sum())
            return on_line + corner

        # y² + h_{g+1}·y = f_{2g+2} 의 근 개수 (deg f = 2g+1 이고 h_{g+1} = 0이면 1개)
        g = curve.genus
        zero = FieldElement.zero(curve.base)
        f_top = curve.f[2 * g + 2] if len(curve.f) > 2 * g + 2 else zero
        h_top = curve.h[g + 1] if len(curve.h) > g + 1 else zero
        F = ElementArray.constant(embedding(f_top))
        H = ElementArray.constant(embedding(h_top))
        return int(_solutions_per_x(F, H).sum())
