# -*- coding: utf-8 -*-
"""CurveModel 엔티티 - 유한체 위의 곡선 모델"""

from dataclasses import dataclass
from typing import Any, Dict, Literal, Optional, Tuple

from ..exceptions import InvalidCurve
from ..value_objects.field_element import FieldElement
from ..value_objects.field_spec import FieldSpec

CurveKind = Literal["elliptic", "hyperelliptic", "plane"]

Monomial = Tuple[Tuple[int, int, int], FieldElement]


def polynomial_degree(coeffs: Tuple[FieldElement, ...]) -> int:
    """오름차순 계수의 차수 (0 다항식은 -1)"""
    for i in range(len(coeffs) - 1, -1, -1):
        if not coeffs[i].is_zero():
            return i
    return -1


@dataclass(frozen=True)
class CurveModel:
    """곡선 모델

    - elliptic / hyperelliptic: y² + h(x)·y = f(x) (f, h는 오름차순 계수)
    - plane: 동차 다항식 F(x, y, z) = Σ c·x^i y^j z^l = 0 (monomials)

    ℙ¹은 1차 평면 곡선(직선)으로 표현되며 genus 0입니다.

    Attributes:
        name: 표시용 이름
        base: 계수체 𝔽_q
        kind: 모델 종류
        f, h: 바이어슈트라스/초타원 모델 계수
        monomials: 평면 곡선 단항식 ((i, j, l), 계수)
        genus: 종수
        curve_id: 곡선 블록의 안정 해시 (캐시 파일 이름)
    """

    name: str
    base: FieldSpec
    kind: CurveKind
    genus: int
    f: Tuple[FieldElement, ...] = ()
    h: Tuple[FieldElement, ...] = ()
    monomials: Tuple[Monomial, ...] = ()
    curve_id: str = ""

    def __post_init__(self):
        if self.kind == "plane":
            self._validate_plane()
        elif self.kind in ("elliptic", "hyperelliptic"):
            self._validate_weierstrass()
        else:
            raise InvalidCurve(f"unknown model kind: {self.kind}")

    # ------------------------------------------------------------------
    # 불변식 검사 (구조적 조건만; 무제곱성/비특이성은 CurveParserService)
    # ------------------------------------------------------------------

    def _validate_weierstrass(self) -> None:
        deg_f = polynomial_degree(self.f)
        deg_h = polynomial_degree(self.h)
        if self.kind == "elliptic":
            if deg_f != 3:
                raise InvalidCurve(f"elliptic: deg f must be 3, got {deg_f}")
            if deg_h > 1:
                raise InvalidCurve(f"elliptic: deg h must be <= 1, got {deg_h}")
            if self.genus != 1:
                raise InvalidCurve(f"elliptic: genus must be 1, got {self.genus}")
        else:
            g = self.genus
            if g < 1:
                raise InvalidCurve(f"hyperelliptic: genus must be >= 1, got {g}")
            if deg_f not in (2 * g + 1, 2 * g + 2):
                raise InvalidCurve(f"hyperelliptic: deg f must be 2g+1 or 2g+2 (g={g}), got {deg_f}")
            if deg_h > g + 1:
                raise InvalidCurve(f"hyperelliptic: deg h must be <= g+1 (g={g}), got {deg_h}")

        if self.base.p == 2 and deg_h < 0:
            raise InvalidCurve("characteristic 2 requires h != 0 (y^2 = f(x) is inseparable)")
        if self.base.p != 2 and self.kind == "hyperelliptic" and deg_h >= 0:
            raise InvalidCurve("odd characteristic: hyperelliptic model requires h = 0")

    def _validate_plane(self) -> None:
        if not self.monomials:
            raise InvalidCurve("plane: polynomial has no monomials")
        degrees = {sum(exponents) for exponents, _ in self.monomials}
        if len(degrees) != 1:
            raise InvalidCurve(f"plane: polynomial is not homogeneous (degrees {sorted(degrees)})")
        d = degrees.pop()
        if d < 1:
            raise InvalidCurve("plane: degree must be >= 1")
        expected = (d - 1) * (d - 2) // 2
        if self.genus != expected:
            raise InvalidCurve(f"plane: genus must be (d-1)(d-2)/2 = {expected}, got {self.genus}")

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def degree(self) -> Optional[int]:
        """평면 곡선의 차수 d (다른 모델은 None)"""
        if self.kind != "plane":
            return None
        return sum(self.monomials[0][0])

    @property
    def deg_f(self) -> int:
        return polynomial_degree(self.f)

    @property
    def deg_h(self) -> int:
        return polynomial_degree(self.h)

    def is_projective_line(self) -> bool:
        return self.kind == "plane" and self.degree == 1

    def to_dict(self) -> Dict[str, Any]:
        """보고서용 요약"""
        return {
            "name": self.name,
            "id": self.curve_id,
            "kind": self.kind,
            "p": self.base.p,
            "k": self.base.k,
            "q": self.q,
            "genus": self.genus,
        }

    def __repr__(self) -> str:
        return f"CurveModel({self.name!r}, kind={self.kind}, q={self.q}, g={self.genus})"
