# -*- coding: utf-8 -*-
"""CLI 명령 트리"""

from .commands import build_parser, parse_complex

__all__ = ['build_parser', 'parse_complex']
