# -*- coding: utf-8 -*-
"""도메인 계층 (엔티티, 값 객체, 도메인 서비스)"""
