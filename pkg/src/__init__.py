# -*- coding: utf-8 -*-
"""ZetaLab 메인 패키지"""
