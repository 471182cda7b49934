# -*- coding: utf-8 -*-
"""
CLI 명령 트리 (analyze / verify / nf)

각 서브커맨드는 handler를 기본값으로 가지며, handler는 DI Container에서
Use Case를 조회해 Report를 반환합니다. 종료 코드와 출력은 main.py가 결정합니다.
"""
import argparse
import logging
from pathlib import Path

import config
from ...application.use_cases.analyze_curve import AnalyzeCurveUseCase
from ...application.use_cases.number_field import NumberFieldUseCase
from ...application.use_cases.verify_suite import SUITE_ALL, VerifySuiteUseCase
from ...core.container import Container, ServiceNames
from ...domain.entities.report import Report

logger = logging.getLogger(__name__)


def parse_complex(text: str):
    """
    --riemann 인자 파싱 ("2", "0.5", "0.5+14.13j")

    허수부가 0이면 실수로 돌려줍니다.

    Raises:
        argparse.ArgumentTypeError: 복소수로 읽을 수 없음
    """
    try:
        value = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value.imag == 0:
        real = value.real
        return int(real) if real.is_integer() else real
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


# ============================================================================
# 핸들러
# ============================================================================

def run_analyze(args: argparse.Namespace) -> Report:
    use_case = Container.resolve(ServiceNames.ANALYZE_CURVE_USE_CASE, AnalyzeCurveUseCase)
    return use_case.execute(Path(args.curve), args.max_degree)


def run_verify(args: argparse.Namespace) -> Report:
    use_case = Container.resolve(ServiceNames.VERIFY_SUITE_USE_CASE, VerifySuiteUseCase)
    return use_case.execute(Path(args.curve), args.suite, args.seed, args.max_degree)


def run_number_field(args: argparse.Namespace) -> Report:
    use_case = Container.resolve(ServiceNames.NUMBER_FIELD_USE_CASE, NumberFieldUseCase)
    if args.disc is not None:
        return use_case.run_discriminant(args.disc, args.trunc)
    return use_case.run_riemann(args.riemann, args.trunc)


# ============================================================================
# 파서
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    """
    ZetaLab 인자 파서

    전역 옵션(--debug, --verbose)은 서브커맨드 앞에 옵니다.

    Examples:
        >>> args = build_parser().parse_args(["nf", "--disc", "23"])
        >>> args.handler is run_number_field
        True
    """
    parser = argparse.ArgumentParser(
        prog="zetalab",
        description="Zeta functions of curves over finite fields and the identities around them",
    )
    parser.add_argument('--version', action='version', version=f"{config.APP_NAME} {config.APP_VERSION}")
    parser.add_argument('--debug', action='store_true',
                        help='디버그 모드: 로그 파일을 logs 폴더에 저장')
    parser.add_argument('--verbose', action='store_true',
                        help='콘솔 로그 레벨을 DEBUG로')

    # 곡선 명령 공통 옵션
    curve_options = argparse.ArgumentParser(add_help=False)
    curve_options.add_argument('--curve', required=True, type=Path, help='곡선 설정 파일 (TOML)')
    curve_options.add_argument('--cache', type=Path, default=None,
                               help=f'점 개수 캐시 디렉토리 ({config.CACHE_ENV_VAR} 환경 변수가 우선)')
    curve_options.add_argument('--workers', type=positive_int, default=None,
                               help=f'차수별 병렬 계산 워커 수 (기본 {config.WORKERS_ENV_VAR} 또는 1)')
    curve_options.add_argument('--max-degree', type=int, default=None,
                               help=f'최대 확대 차수 M (≥ 2g+3, q^M ≤ {config.FIELD_CARDINALITY_CAP}; '
                                    f'기본 max({config.DEFAULT_MAX_DEGREE}, 2g+3)을 상한 안으로 줄인 값)')

    output_options = argparse.ArgumentParser(add_help=False)
    output_options.add_argument('--out', type=Path, default=None, help='보고서 경로 (생략 시 표준 출력)')

    subparsers = parser.add_subparsers(dest='command', required=True, metavar='{analyze,verify,nf}')

    analyze = subparsers.add_parser('analyze', parents=[curve_options, output_options],
                                    help='점 개수 → P(t) 적합 → 제타 검사')
    analyze.set_defaults(handler=run_analyze)

    verify = subparsers.add_parser('verify', parents=[curve_options, output_options],
                                   help='시드 고정 불변식 스위트')
    verify.add_argument('--suite', required=True,
                        help=f"{'|'.join(config.VERIFY_SUITES + (SUITE_ALL,))}")
    verify.add_argument('--seed', type=int, default=None,
                        help=f"난수 시드 (기본 {config.VERIFY_DEFAULTS['seed']})")
    verify.set_defaults(handler=run_verify)

    nf = subparsers.add_parser('nf', parents=[output_options], help='허수 이차체 / 리만 ξ 검사')
    target = nf.add_mutually_exclusive_group(required=True)
    target.add_argument('--disc', type=int, default=None, help='D (-D는 기본 판별식)')
    target.add_argument('--riemann', type=parse_complex, default=None, help='ξ(s)를 계산할 s')
    nf.add_argument('--trunc', type=int, default=None, help='급수 절단 하한 N')
    nf.set_defaults(handler=run_number_field)

    return parser
