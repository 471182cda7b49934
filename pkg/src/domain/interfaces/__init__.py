# -*- coding: utf-8 -*-
"""도메인 인터페이스"""

from .repository_interface import ICountCacheRepository

__all__ = ['ICountCacheRepository']
