# -*- coding: utf-8 -*-
"""프레젠테이션 계층 (CLI)"""
