# -*- coding: utf-8 -*-
"""CurveParserService - 곡선 설정 문서(TOML) 파싱과 모델 검증"""

import hashlib
import json
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import Any, Dict, List, Tuple

import numpy as np

import config
from ..entities.curve_model import CurveModel
from ..exceptions import InvalidCurve, ParseError, TooLarge
from ..value_objects.element_array import ElementArray
from ..value_objects.field_element import FieldElement
from ..value_objects.field_spec import FieldSpec
from .field_arithmetic_service import FieldArithmeticService
from .polynomial_evaluation import (
    embed_monomials,
    homogeneous_value,
    monomial_partials,
    poly_add,
    poly_derivative,
    poly_gcd,
    poly_mul,
    poly_scale,
)

logger = logging.getLogger(__name__)

MODELS = ("elliptic", "hyperelliptic", "plane", "p1")


class CurveParserService:
    """곡선 설정 문서를 CurveModel로 변환하는 도메인 서비스

    문서 형식 ([curve] 테이블):

        [curve]
        name = "y^2 + y = x^3 over F2"
        model = "elliptic"        # elliptic | hyperelliptic | plane | p1
        p = 2
        k = 1
        h = [0, 1]                # elliptic: [a1, a3], hyperelliptic: 오름차순 계수
        f = [0, 0, 0, 1]
        # plane 모델: monomials = [[i, j, l, c], ...]  (c·x^i y^j z^l)

    k = 1이면 계수는 정수이고 mod p로 축약됩니다. k > 1이면 계수는 [0, q) 범위의
    정수이며 𝔽_q 열거 인덱스(밑 p 자릿수 = 계수 벡터)로 해석됩니다.
    """

    @staticmethod
    def parse_curve(text: str) -> CurveModel:
        """
        설정 문서를 파싱하고 모든 CurveModel 불변식을 검증

        Args:
            text: TOML 문서

        Returns:
            CurveModel

        Raises:
            ParseError: 문서 형식 오류
            InvalidCurve: 모델 불변식 위반 (위반 내용 포함)
            InvalidPrime / TooLarge: 계수체 생성 실패
        """
        try:
            document = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            raise ParseError(f"malformed curve document: {e}") from e

        block = document.get("curve")
        if not isinstance(block, dict):
            raise ParseError("missing [curve] table")

        model = CurveParserService._require(block, "model", str)
        if model not in MODELS:
            raise ParseError(f"unknown model '{model}' (expected one of {', '.join(MODELS)})")
        p = CurveParserService._require(block, "p", int)
        k = block.get("k", 1)
        if not isinstance(k, int) or isinstance(k, bool):
            raise ParseError("'k' must be an integer")
        name = block.get("name", "")
        if not isinstance(name, str):
            raise ParseError("'name' must be a string")

        base = FieldArithmeticService.build_field(p, k)
        canonical: Dict[str, Any] = {"model": model, "p": p, "k": k}

        if model in ("elliptic", "hyperelliptic"):
            f = CurveParserService._coefficients(block, "f", base, required=True)
            h = CurveParserService._coefficients(block, "h", base, required=False)
            if model == "elliptic":
                h = CurveParserService._weierstrass_pair(h, base)
            canonical["f"] = [c.to_int() for c in f]
            canonical["h"] = [c.to_int() for c in h]
            curve = CurveParserService._weierstrass(name, base, model, f, h, canonical)
        else:
            if model == "p1":
                monomials = (((0, 1, 0), FieldElement.one(base)),)
            else:
                monomials = CurveParserService._monomials(block, base)
            canonical["monomials"] = sorted([list(e) + [c.to_int()] for e, c in monomials])
            degree = sum(monomials[0][0]) if monomials else 0
            genus = (degree - 1) * (degree - 2) // 2
            curve = CurveModel(
                name=name,
                base=base,
                kind="plane",
                genus=genus,
                monomials=monomials,
                curve_id=CurveParserService.curve_id(canonical),
            )
            if degree >= 2:
                CurveParserService._check_plane_smoothness(curve)

        logger.info(f"Parsed curve {curve!r} id={curve.curve_id}")
        return curve

    @staticmethod
    def curve_id(canonical: Dict[str, Any]) -> str:
        """정규화된 곡선 블록의 안정 해시 (SHA-256 앞 16자리, 이름 제외)"""
        payload = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    # ------------------------------------------------------------------
    # 문서 필드 읽기
    # ------------------------------------------------------------------

    @staticmethod
    def _require(block: Dict[str, Any], key: str, kind: type) -> Any:
        if key not in block:
            raise ParseError(f"missing key '{key}' in [curve]")
        value = block[key]
        if not isinstance(value, kind) or isinstance(value, bool):
            raise ParseError(f"'{key}' must be of type {kind.__name__}")
        return value

    @staticmethod
    def _element(value: Any, base: FieldSpec, key: str) -> FieldElement:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseError(f"'{key}' entries must be integers, got {value!r}")
        if base.is_prime_field:
            return FieldElement.from_prime_field(base, value)
        if not 0 <= value < base.q:
            raise ParseError(f"'{key}' entry {value} out of range [0, {base.q}) for F_{base.q}")
        return FieldElement.from_int(base, value)

    @staticmethod
    def _coefficients(block: Dict[str, Any], key: str, base: FieldSpec, required: bool) -> Tuple[FieldElement, ...]:
        if key not in block:
            if required:
                raise ParseError(f"missing key '{key}' in [curve]")
            return ()
        values = block[key]
        if not isinstance(values, list):
            raise ParseError(f"'{key}' must be a list of integers")
        coeffs = [CurveParserService._element(v, base, key) for v in values]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return tuple(coeffs)

    @staticmethod
    def _weierstrass_pair(h: Tuple[FieldElement, ...], base: FieldSpec) -> Tuple[FieldElement, ...]:
        """elliptic 모델의 h = [a1, a3] (y² + a1·xy + a3·y) 를 오름차순 계수 (a3, a1)로 변환"""
        if len(h) > 2:
            raise ParseError(f"elliptic: h must be [a1, a3], got {len(h)} entries")
        padded = list(h) + [FieldElement.zero(base)] * (2 - len(h))
        ascending = [padded[1], padded[0]]
        while ascending and ascending[-1].is_zero():
            ascending.pop()
        return tuple(ascending)

    @staticmethod
    def _monomials(block: Dict[str, Any], base: FieldSpec):
        entries = block.get("monomials")
        if not isinstance(entries, list) or not entries:
            raise ParseError("plane model requires a non-empty 'monomials' list of [i, j, l, c]")
        collected: Dict[Tuple[int, int, int], FieldElement] = {}
        for entry in entries:
            if not isinstance(entry, list) or len(entry) != 4:
                raise ParseError(f"monomial must be [i, j, l, c], got {entry!r}")
            i, j, l, c = entry
            if any(not isinstance(e, int) or e < 0 for e in (i, j, l)):
                raise ParseError(f"monomial exponents must be non-negative integers: {entry!r}")
            exponents = (i, j, l)
            value = CurveParserService._element(c, base, "monomials")
            collected[exponents] = collected.get(exponents, FieldElement.zero(base)) + value
        monomials = tuple(sorted((e, c) for e, c in collected.items() if not c.is_zero()))
        if not monomials:
            raise InvalidCurve("plane: polynomial is identically zero")
        return monomials

    # ------------------------------------------------------------------
    # 모델별 검증
    # ------------------------------------------------------------------

    @staticmethod
    def _weierstrass(name, base, model, f, h, canonical) -> CurveModel:
        deg_f = len(f) - 1
        if model == "elliptic":
            genus = 1
        else:
            if deg_f < 3:
                raise InvalidCurve(f"hyperelliptic: deg f must be >= 3, got {deg_f}")
            genus = (deg_f - 1) // 2

        curve = CurveModel(
            name=name,
            base=base,
            kind=model,
            genus=genus,
            f=f,
            h=h,
            curve_id=CurveParserService.curve_id(canonical),
        )

        if base.p == 2:
            # 특이점: h(x) = 0, h'(x)² f(x) = f'(x)²
            h_prime = poly_derivative(h, base)
            f_prime = poly_derivative(f, base)
            condition = poly_add(
                poly_mul(poly_mul(h_prime, h_prime, base), f, base),
                poly_mul(f_prime, f_prime, base),
                base,
            )
            common = poly_gcd(h, condition, base)
            if len(common) > 1:
                raise InvalidCurve(f"{model}: affine model is singular (gcd(h, h'^2 f + f'^2) has degree {len(common) - 1})")
        else:
            # (2y + h)² = h² + 4f
            four = FieldElement.from_prime_field(base, 4)
            disc = poly_add(poly_mul(h, h, base), poly_scale(f, four), base)
            common = poly_gcd(disc, poly_derivative(disc, base), base)
            if len(common) > 1:
                label = "f is not squarefree" if not h else "h^2 + 4f is not squarefree"
                raise InvalidCurve(f"{model}: {label} (gcd with derivative has degree {len(common) - 1})")
        return curve

    @staticmethod
    def _check_plane_smoothness(curve: CurveModel) -> None:
        """
        𝔽_{q^m} (m ≤ SMOOTHNESS_CHECK_MAX_DEGREE) 위에서 F와 세 편미분의 공통 영점을 전수 탐색

        q^{2m}이 SMOOTHNESS_CHECK_MAX_PAIRS를 넘는 차수는 건너뜁니다 (부분 검사).

        Raises:
            InvalidCurve: 특이점 발견
        """
        base = curve.base
        for m in range(1, config.SMOOTHNESS_CHECK_MAX_DEGREE + 1):
            if base.q ** (2 * m) > config.SMOOTHNESS_CHECK_MAX_PAIRS:
                logger.info(f"Smoothness check skipped for m={m} (q^2m={base.q ** (2 * m)})")
                break
            try:
                big, embedding = FieldArithmeticService.extension_of(base, m)
            except TooLarge:
                break
            polys = [embed_monomials(curve.monomials, embedding)]
            polys += [embed_monomials(partial, embedding) for partial in monomial_partials(curve.monomials)]

            # 아핀 차트 z = 1: 모든 (x, y) 쌍
            xs = ElementArray.enumerate(big)
            X = ElementArray(big, np.repeat(xs.data, big.q, axis=1))
            Y = ElementArray(big, np.tile(xs.data, (1, big.q)))
            Z = ElementArray.ones(big)
            singular = np.ones(X.size, dtype=bool)
            for poly in polys:
                singular &= homogeneous_value(poly, X, Y, Z).is_zero()
            if singular.any():
                j = int(singular.nonzero()[0][0])
                raise InvalidCurve(f"plane: singular point [{X.element(j)!r} : {Y.element(j)!r} : 1] over F_{big.q}")

            # 무한원 직선 z = 0: [x : 1 : 0] 과 [1 : 0 : 0]
            zero = ElementArray.zeros(big)
            at_infinity: List[Tuple[ElementArray, ElementArray]] = [
                (xs, ElementArray.ones(big)),
                (ElementArray.ones(big), zero),
            ]
            for X_inf, Y_inf in at_infinity:
                singular = None
                for poly in polys:
                    mask = homogeneous_value(poly, X_inf, Y_inf, zero).is_zero()
                    singular = mask if singular is None else singular & mask
                if singular.any():
                    raise InvalidCurve(f"plane: singular point at infinity over F_{big.q}")
            logger.debug(f"Smoothness verified over F_{big.q}")
