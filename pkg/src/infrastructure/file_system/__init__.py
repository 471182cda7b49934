# -*- coding: utf-8 -*-
"""파일 시스템 관련 (보고서 출력)"""

from .report_writer import ReportWriter

__all__ = ['ReportWriter']
