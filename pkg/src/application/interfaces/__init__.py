# -*- coding: utf-8 -*-
"""애플리케이션 인터페이스"""

from .service_interface import IPointCountService

__all__ = ['IPointCountService']
