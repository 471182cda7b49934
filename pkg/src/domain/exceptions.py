# -*- coding: utf-8 -*-
"""
도메인 예외 계층

모든 예외는 ZetaLabError를 상속하며, CLI 종료 코드(exit_code)와
기계 판독용 오류 객체 변환(to_dict)을 제공합니다.

종료 코드 규약:
    0: 모든 검사 통과
    1: 검사 실패 또는 내부 일관성 오류
    2: 사용법 / 입력 파싱 오류
"""
from typing import Dict, Any


class ZetaLabError(Exception):
    """ZetaLab 예외 기본 클래스"""

    exit_code: int = 1

    @property
    def error_type(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        """
        기계 판독용 오류 객체로 변환

        Returns:
            {"error": {"type": ..., "message": ...}} 형태의 딕셔너리
        """
        return {"error": {"type": self.error_type, "message": str(self)}}


class InputError(ZetaLabError, ValueError):
    """입력 / 사용법 오류 (exit 2)"""

    exit_code = 2


# ============================================================================
# field_arith
# ============================================================================

class InvalidPrime(InputError):
    """p가 소수가 아님"""


class TooLarge(InputError):
    """유한체 크기 상한(2^20) 초과"""


class SpecMismatch(InputError):
    """서로 다른 FieldSpec(또는 서로 다른 제곱근 기저)의 원소를 섞어 연산"""


class NoEmbedding(InputError):
    """부분체 매장이 존재하지 않음 (차수가 나누어떨어지지 않음)"""


class DivisionByZero(InputError, ZeroDivisionError):
    """0의 역원 요청"""


# ============================================================================
# curve_count / zeta_core
# ============================================================================

class ParseError(InputError):
    """곡선 설정 문서 파싱 실패"""


class InvalidCurve(InputError):
    """곡선 모델 불변식 위반 (어떤 불변식인지 메시지에 포함)"""


class NeedMoreCounts(InputError):
    """요청한 계산에 필요한 점 개수 / 스펙트럼이 부족함"""


class InconsistentCounts(ZetaLabError):
    """Möbius 역변환 결과가 음수 또는 비정수 (점 계산 버그 신호)"""


class CountsInconsistent(ZetaLabError):
    """분자 다항식 P(t) 적합 결과가 정수 계수가 아님"""


# ============================================================================
# graded_spaces / torus_residues
# ============================================================================

class SpaceMismatch(InputError):
    """함수 공간(D, D₊, D₊₊) 전제 조건 위반"""


class NotInSpace(InputError):
    """축약 후 극점 장부가 허용 범위를 벗어남"""


class UnsupportedPole(InputError):
    """1차를 넘는 극점 또는 지원하지 않는 극점"""


# ============================================================================
# number_field
# ============================================================================

class InvalidDiscriminant(InputError):
    """-D가 기본 판별식이 아님"""


class InvalidArgument(InputError):
    """수치 인자의 정의역 위반"""


class PoleError(InputError):
    """완비 제타의 극점(s = 0, 1)에서의 평가 요청"""
