# -*- coding: utf-8 -*-
"""애플리케이션 서비스"""

from .point_count_service import PointCountService
from .random_input_service import RandomInputService

__all__ = ['PointCountService', 'RandomInputService']
