# -*- coding: utf-8 -*-
"""공용 fixture: 예제 곡선과 세션 단위 점 개수"""
from pathlib import Path

import pytest

from src.domain.services.point_counting_service import PointCountingService
from src.domain.services.spectrum_service import SpectrumService
from src.domain.services.zeta_service import ZetaService
from src.infrastructure.repositories.curve_config_repository import CurveConfigRepository

CURVES_DIR = Path(__file__).resolve().parent.parent / "curves"
CURVE_NAMES = ("p1_f2", "p1_f3", "elliptic_f2", "elliptic_f3", "genus2_f5")


def curve_path(name: str) -> Path:
    return CURVES_DIR / f"{name}.toml"


@pytest.fixture(scope="session")
def curves():
    """이름 → CurveModel"""
    repository = CurveConfigRepository()
    return {name: repository.load(curve_path(name)) for name in CURVE_NAMES}


@pytest.fixture(scope="session")
def curve_counts(curves):
    """이름 → {m: N_m}, m = 1..max(8, 2g+3)"""
    counts = {}
    for name, curve in curves.items():
        M = max(8, 2 * curve.genus + 3)
        counts[name] = {m: PointCountingService.count_points(curve, m) for m in range(1, M + 1)}
    return counts


@pytest.fixture(scope="session")
def tables(curves, curve_counts):
    """이름 → PointCountTable"""
    return {
        name: SpectrumService.closed_point_spectrum(curve_counts[name], curves[name].curve_id)
        for name in CURVE_NAMES
    }


@pytest.fixture(scope="session")
def zetas(curves, curve_counts):
    """이름 → N_1..N_{2g}로 적합한 ZetaData"""
    result = {}
    for name, curve in curves.items():
        fit, _ = SpectrumService.split_counts(curve_counts[name], 2 * curve.genus)
        result[name] = ZetaService.fit_numerator(curve.q, curve.genus, fit)
    return result
