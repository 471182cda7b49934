# -*- coding: utf-8 -*-
"""유한체 계수 다항식의 벡터화 평가와 정확한 다항식 연산 (점 계산 / 곡선 검증 공용)"""

from typing import Dict, List, Sequence, Tuple

from ..value_objects.element_array import ElementArray
from ..value_objects.field_element import FieldElement
from ..value_objects.field_spec import FieldSpec

Monomial = Tuple[Tuple[int, int, int], FieldElement]


# ============================================================================
# 벡터화 평가
# ============================================================================

def horner(coeffs: Sequence[FieldElement], x: ElementArray) -> ElementArray:
    """Σ c_i x^i 를 모든 x에 대해 평가 (coeffs는 x와 같은 체의 원소)"""
    value = ElementArray.zeros(x.spec, 1)
    for c in reversed(coeffs):
        value = value * x + ElementArray.constant(c)
    if value.size != x.size:
        value = ElementArray(x.spec, value.data.repeat(x.size, axis=1))
    return value


def homogeneous_value(
    monomials: Sequence[Monomial],
    x: ElementArray,
    y: ElementArray,
    z: ElementArray,
) -> ElementArray:
    """F(x, y, z) = Σ c·x^i y^j z^l (x, y, z는 크기가 같거나 1)"""
    size = max(x.size, y.size, z.size)
    powers: Dict[Tuple[str, int], ElementArray] = {}

    def power(name: str, base: ElementArray, e: int) -> ElementArray:
        key = (name, e)
        if key not in powers:
            powers[key] = base ** e
        return powers[key]

    total = ElementArray.zeros(x.spec, size)
    for (i, j, l), c in monomials:
        term = ElementArray.constant(c)
        if i:
            term = term * power("x", x, i)
        if j:
            term = term * power("y", y, j)
        if l:
            term = term * power("z", z, l)
        total = total + term
    return total


# ============================================================================
# 정확한 다항식 연산 (오름차순 FieldElement 리스트)
# ============================================================================

def embed_all(coeffs: Sequence[FieldElement], embedding) -> Tuple[FieldElement, ...]:
    return tuple(embedding(c) for c in coeffs)


def embed_monomials(monomials: Sequence[Monomial], embedding) -> Tuple[Monomial, ...]:
    return tuple((exponents, embedding(c)) for exponents, c in monomials)


def monomial_partials(monomials: Sequence[Monomial]) -> List[Tuple[Monomial, ...]]:
    """∂F/∂x, ∂F/∂y, ∂F/∂z 단항식 목록"""
    partials = []
    for axis in range(3):
        result = []
        for exponents, c in monomials:
            e = exponents[axis]
            if e == 0:
                continue
            coefficient = c * FieldElement.from_prime_field(c.spec, e)
            if coefficient.is_zero():
                continue
            lowered = list(exponents)
            lowered[axis] -= 1
            result.append((tuple(lowered), coefficient))
        partials.append(tuple(result))
    return partials


def _strip(a: List[FieldElement]) -> List[FieldElement]:
    while a and a[-1].is_zero():
        a = a[:-1]
    return a


def poly_mul(a: Sequence[FieldElement], b: Sequence[FieldElement], spec: FieldSpec) -> List[FieldElement]:
    if not a or not b:
        return []
    result = [FieldElement.zero(spec)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            result[i + j] = result[i + j] + ai * bj
    return _strip(result)


def poly_add(a: Sequence[FieldElement], b: Sequence[FieldElement], spec: FieldSpec) -> List[FieldElement]:
    n = max(len(a), len(b))
    zero = FieldElement.zero(spec)
    return _strip([
        (a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)
    ])


def poly_scale(a: Sequence[FieldElement], c: FieldElement) -> List[FieldElement]:
    return _strip([ai * c for ai in a])


def poly_derivative(a: Sequence[FieldElement], spec: FieldSpec) -> List[FieldElement]:
    return _strip([a[i] * FieldElement.from_prime_field(spec, i) for i in range(1, len(a))])


def poly_rem(a: Sequence[FieldElement], b: Sequence[FieldElement], spec: FieldSpec) -> List[FieldElement]:
    a = _strip(list(a))
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inverse = b[-1].inverse()
    while len(a) >= len(b):
        factor = a[-1] * lead_inverse
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - factor * bi
        a = _strip(a)
    return a


def poly_gcd(a: Sequence[FieldElement], b: Sequence[FieldElement], spec: FieldSpec) -> List[FieldElement]:
    """모닉 gcd (둘 다 0이면 빈 리스트)"""
    a = _strip(list(a))
    b = _strip(list(b))
    while b:
        a, b = b, poly_rem(a, b, spec)
    if not a:
        return []
    return poly_scale(a, a[-1].inverse())
