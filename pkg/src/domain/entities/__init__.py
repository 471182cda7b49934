# -*- coding: utf-8 -*-
"""Domain Entities"""

from .curve_model import CurveModel
from .point_count_table import PointCountTable
from .zeta_data import ZetaData
from .power_sum_table import PowerSumTable
from .graded_function import GradedFunction
from .torus_rational import TorusRational
from .residue_report import ResidueReport
from .quadratic_field_data import QuadraticFieldData, CompletedZetaTerm
from .report import CheckResult, Report

__all__ = [
    'CurveModel',
    'PointCountTable',
    'ZetaData',
    'PowerSumTable',
    'GradedFunction',
    'TorusRational',
    'ResidueReport',
    'QuadraticFieldData',
    'CompletedZetaTerm',
    'CheckResult',
    'Report',
]
