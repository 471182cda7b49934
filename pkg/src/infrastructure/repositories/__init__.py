# -*- coding: utf-8 -*-
"""리포지토리 구현"""

from .count_cache_repository_impl import CountCacheRepositoryImpl
from .curve_config_repository import CurveConfigRepository

__all__ = ['CountCacheRepositoryImpl', 'CurveConfigRepository']
