# -*- coding: utf-8 -*-
"""Use Cases - CLI 명령별 애플리케이션 로직"""

from .analyze_curve import AnalyzeCurveUseCase
from .verify_suite import VerifySuiteUseCase
from .number_field import NumberFieldUseCase

__all__ = [
    'AnalyzeCurveUseCase',
    'VerifySuiteUseCase',
    'NumberFieldUseCase',
]
