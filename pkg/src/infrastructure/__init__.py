# -*- coding: utf-8 -*-
"""인프라 계층 (리포지토리, 파일 시스템)"""
