# -*- coding: utf-8 -*-
"""
ZetaLab CLI 진입점
"""
import sys
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional

import config
from src.core.container import Container, ServiceNames
from src.domain.exceptions import ZetaLabError
from src.infrastructure.file_system.report_writer import ReportWriter
from src.presentation.cli.commands import build_parser

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(debug: bool = False, verbose: bool = False) -> Optional[Path]:
    """
    로깅 설정 (콘솔 + 디버그 파일)

    콘솔 로그는 stderr로 보내 stdout의 JSON 보고서와 섞이지 않게 합니다.

    Returns:
        디버그 로그 파일 경로 (디버그 모드가 아니면 None)
    """
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.DEBUG if verbose else logging.INFO)
    handlers: List[logging.Handler] = [console]

    log_file = None
    if debug:
        config.LOG_DIR.mkdir(parents=True, exist_ok=True)
        log_file = config.LOG_DIR / f"zetalab_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        handlers.append(file_handler)

    logging.basicConfig(
        level=logging.DEBUG if (debug or verbose) else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return log_file


def setup_global_exception_handler():
    """처리되지 않은 예외를 스택 트레이스와 함께 기록"""
    def handle_exception(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return
        logger.critical(
            "처리되지 않은 예외 발생",
            exc_info=(exc_type, exc_value, exc_traceback)
        )

    sys.excepthook = handle_exception


def initialize_infrastructure_layer(cache_dir: Path):
    """
    Infrastructure Layer 초기화

    점 개수 캐시, 곡선 설정 repository, 보고서 출력기를 DI Container에 등록
    """
    from src.infrastructure.repositories.count_cache_repository_impl import CountCacheRepositoryImpl
    from src.infrastructure.repositories.curve_config_repository import CurveConfigRepository

    Container.register(ServiceNames.COUNT_CACHE_REPOSITORY, CountCacheRepositoryImpl(cache_dir))
    Container.register(ServiceNames.CURVE_CONFIG_REPOSITORY, CurveConfigRepository())
    if not Container.has(ServiceNames.REPORT_WRITER):
        Container.register(ServiceNames.REPORT_WRITER, ReportWriter())
    logger.debug(f"Infrastructure layer initialized (cache: {cache_dir})")


def initialize_application_layer(workers: Optional[int] = None):
    """
    Application Layer 초기화

    Infrastructure Layer의 repository를 주입해 서비스와 Use Case를 등록
    """
    from src.application.services.point_count_service import PointCountService
    from src.application.use_cases.analyze_curve import AnalyzeCurveUseCase
    from src.application.use_cases.number_field import NumberFieldUseCase
    from src.application.use_cases.verify_suite import VerifySuiteUseCase

    cache_repository = Container.resolve(ServiceNames.COUNT_CACHE_REPOSITORY)
    curve_repository = Container.resolve(ServiceNames.CURVE_CONFIG_REPOSITORY)

    point_count_service = PointCountService(repository=cache_repository, workers=workers)
    Container.register(ServiceNames.POINT_COUNT_SERVICE, point_count_service)

    analyze_use_case = AnalyzeCurveUseCase(curve_repository, point_count_service)
    Container.register(ServiceNames.ANALYZE_CURVE_USE_CASE, analyze_use_case)
    Container.register(ServiceNames.VERIFY_SUITE_USE_CASE, VerifySuiteUseCase(analyze_use_case))
    Container.register(ServiceNames.NUMBER_FIELD_USE_CASE, NumberFieldUseCase())
    logger.debug("Application layer initialized")


def main(argv: Optional[List[str]] = None, writer: Optional[ReportWriter] = None) -> int:
    """
    CLI 진입점

    Args:
        argv: 인자 목록 (None이면 sys.argv[1:])
        writer: 보고서 출력기 (테스트에서 스트림 주입용)

    Returns:
        종료 코드 (0: 모든 검사 통과, 1: 검사 실패 / 일관성 오류, 2: 사용법 / 입력 오류)
    """
    args = build_parser().parse_args(argv)
    log_file = configure_logging(args.debug, args.verbose)
    setup_global_exception_handler()
    logger.info(f"=== {config.APP_NAME} {config.APP_VERSION} {args.command} ===")
    if log_file:
        logger.info(f"로그 파일: {log_file}")

    Container.clear()
    writer = writer or ReportWriter()
    Container.register(ServiceNames.REPORT_WRITER, writer)
    out = getattr(args, 'out', None)

    try:
        initialize_infrastructure_layer(config.resolve_cache_dir(getattr(args, 'cache', None)))
        initialize_application_layer(getattr(args, 'workers', None))
        report = args.handler(args)
    except ZetaLabError as e:
        logger.error(f"{e.error_type}: {e}")
        writer.write(e.to_dict(), out)
        return e.exit_code

    writer.write(report.to_dict(), out)
    for check in report.failed_checks:
        logger.warning(f"Check failed: {check.name}")
    return config.EXIT_CODES['ok'] if report.ok else config.EXIT_CODES['check_failed']


if __name__ == "__main__":
    sys.exit(main())
