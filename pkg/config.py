# -*- coding: utf-8 -*-
"""
ZetaLab 애플리케이션 설정

경로, 계산 상한, 허용 오차, 검증 스위트 기본값을 한 곳에서 관리합니다.
"""
import os
import sys
from pathlib import Path

# 프로젝트 루트 디렉토리 (절대 경로)
# PyInstaller로 빌드된 경우 exe 파일과 같은 디렉토리 사용
if getattr(sys, 'frozen', False):
    PROJECT_ROOT = Path(sys.executable).parent.absolute()
else:
    PROJECT_ROOT = Path(__file__).parent.absolute()

# 데이터 디렉토리 (절대 경로)
DATA_DIR = PROJECT_ROOT / "ZetaLab_Data"
DEFAULT_CACHE_DIR = DATA_DIR / "count_cache"
LOG_DIR = PROJECT_ROOT / "logs"

# 애플리케이션 기본 설정
APP_NAME = "ZetaLab"
APP_VERSION = "1.0.0"

# 환경 변수 (우선순위: 환경 변수 > CLI 인자 > 기본값)
CACHE_ENV_VAR = "ZETALAB_CACHE"
WORKERS_ENV_VAR = "ZETALAB_WORKERS"

# ============================================================================
# 유한체 / 점 계산 설정
# ============================================================================

FIELD_CARDINALITY_CAP = 2 ** 20  # 데스크 규모 상한

# 벡터화 계산 시 한 번에 처리할 원소 수
COUNT_CHUNK_SIZE = 1 << 16

# 병렬 점 계산 워커 수 (1이면 단일 프로세스)
COUNT_WORKERS = int(os.environ.get(WORKERS_ENV_VAR, "1"))

# 평면 곡선 비특이성 부분 검사
SMOOTHNESS_CHECK_MAX_DEGREE = 4
SMOOTHNESS_CHECK_MAX_PAIRS = 1 << 20  # q^{2m} 이 이 값을 넘으면 해당 차수는 건너뜀

# ============================================================================
# 허용 오차
# ============================================================================

TOLERANCES = {
    'root_modulus': 1e-9,       # ||λ| - √q|
    'power_sum_numeric': 1e-8,  # Newton 항등식 vs 수치 근
    'weil_bound_slack': 1e-6,
    'zeta_numeric': 1e-10,      # ζ_C 수치 함수방정식 (상대)
    'theta': 1e-10,
    'residue_identity': 1e-10,
    'theta_tail': 1e-14,        # 세타 급수 꼬리 / θ
    'residue_tail': 1e-12,
    'riemann_xi': 1e-9,
    'riemann_xi_anchor': 1e-9,
    'gaussian': 1e-8,
    'gaussian_poisson': 1e-10,
    'dedekind': 1e-10,
    'class_number_relative': 1e-2,
}

# ============================================================================
# 검증 스위트 기본값
# ============================================================================

VERIFY_DEFAULTS = {
    'degree_range': (-5, 5),
    'shift_range': (-3, 3),
    'explicit_random_count': 20,
    'explicit_support': (-6, 6),
    'conjugacy_random_count': 20,
    'round_trip_random_count': 50,
    'fourier_random_count': 50,
    'fourier_grid_q': (2, 3, 4, 5, 9),
    'fourier_grid_k': (-2, -1, 0, 1, 2, 3),
    'residue_random_count': 100,
    'residue_numerator_degree': 8,
    'tate_iwasawa_offsets': (0, 5, 10),
    'seed': 0,
}

# 분석 파이프라인 기본 최대 차수 (2g+3 미만이면 자동으로 상향)
DEFAULT_MAX_DEGREE = 8

# ζ_C 수치 함수방정식 표본 (q^{-s} 가 1, 1/q 가 되지 않는 점)
ZETA_NUMERIC_SAMPLES = (0.3 + 2j, 2.5, -0.7 + 1.1j)

# 검증 스위트 이름 ("all"은 전부 실행)
VERIFY_SUITES = ("poisson", "explicit", "diagram", "tate-iwasawa", "fourier", "residues")

# ============================================================================
# CLI 종료 코드 (안정 계약)
# ============================================================================

EXIT_CODES = {
    "ok": 0,
    "check_failed": 1,
    "usage": 2,
}

# ============================================================================
# 수체 / 아르키메데스 검사 기본값
# ============================================================================

NUMBER_FIELD_DEFAULTS = {
    'ideal_count_n_max': 30,
    'theta_points': (1.0, 0.5),          # y 값 (1/√D 고정점은 별도로 추가)
    'analytic_terms': 10 ** 6,
    'riemann_trunc': 10,
    'riemann_samples': (2, 3, 0.5 + 7j, 0.25, 1.5 + 2j, -1.5, 0.5 + 14.134725j, 4, 0.75 - 3j, 2.5 + 0.5j),
    'gaussian_a': 1,
    'gaussian_n': 1,
    'gaussian_s': 2,
    'gaussian_grid_half_width': 12.0,
    'gaussian_poisson_t': (0.5, 1.0, 2.0),
    'gaussian_poisson_terms': 20,
    'dedekind_samples': (2.5, 0.3 + 2j, 0.5 + 3j, -0.5 + 1j),  # 1-s 가 Γ의 극에 걸리지 않는 점
}

# ============================================================================
# 리소스 파일 경로 설정
# ============================================================================

REPORT_SCHEMA_FILE = Path("schemas") / "report.schema.json"
CURVES_DIR = PROJECT_ROOT / "curves"


def get_resource_path(relative_path):
    """
    리소스 파일 경로를 반환합니다 (EXE 단독 배포 지원).

    개발 환경과 PyInstaller로 빌드된 환경 모두에서 올바른 경로를 반환합니다.
    빌드 환경에서는 _MEIPASS에 추출된 리소스 파일을 사용합니다.

    Args:
        relative_path: 프로젝트 루트 기준 상대 경로 (Path 또는 str)

    Returns:
        Path: 리소스 파일의 절대 경로
    """
    relative_path = Path(relative_path)

    # 빌드 환경 (PyInstaller)
    if getattr(sys, 'frozen', False):
        base_path = Path(getattr(sys, '_MEIPASS', Path(sys.executable).parent))
        resource_path = base_path / relative_path
        if resource_path.exists():
            return resource_path

    # 개발 환경
    return PROJECT_ROOT / relative_path


def resolve_cache_dir(cli_value=None) -> Path:
    """
    점 개수 캐시 디렉토리 결정

    ZETALAB_CACHE 환경 변수가 --cache 인자보다 우선합니다.

    Args:
        cli_value: --cache 인자 값 (없으면 None)

    Returns:
        Path: 캐시 디렉토리
    """
    env_value = os.environ.get(CACHE_ENV_VAR)
    if env_value:
        return Path(env_value)
    if cli_value:
        return Path(cli_value)
    return DEFAULT_CACHE_DIR
