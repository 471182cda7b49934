# -*- coding: utf-8 -*-
"""애플리케이션 계층 (유스케이스, 애플리케이션 서비스)"""
