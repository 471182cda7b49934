# -*- coding: utf-8 -*-
"""Domain Services"""

from .field_arithmetic_service import FieldArithmeticService, FieldEmbedding
from .curve_parser_service import CurveParserService
from .point_counting_service import PointCountingService
from .spectrum_service import SpectrumService
from .zeta_service import ZetaService
from .torus_residue_service import TorusResidueService
from .graded_space_service import GradedSpaceService
from .explicit_formula_service import ExplicitFormulaService
from .number_field_service import NumberFieldService
from .archimedean_service import ArchimedeanService

__all__ = [
    'FieldArithmeticService',
    'FieldEmbedding',
    'CurveParserService',
    'PointCountingService',
    'SpectrumService',
    'ZetaService',
    'TorusResidueService',
    'GradedSpaceService',
    'ExplicitFormulaService',
    'NumberFieldService',
    'ArchimedeanService',
]
