# -*- coding: utf-8 -*-
"""코어 컴포넌트 (DI Container)"""

from .container import Container, ServiceNames

__all__ = ['Container', 'ServiceNames']
