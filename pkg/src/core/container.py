# -*- coding: utf-8 -*-
"""
의존성 주입 컨테이너 (DI Container)

main.py가 CLI 인자(--cache, --workers)에 따라 레이어별 서비스를 등록하고
명령 핸들러가 이름으로 조회합니다.
"""
from typing import Any, Dict, Optional, Type, TypeVar

T = TypeVar('T')


class Container:
    """의존성 주입 컨테이너 (Singleton)

    Examples:
        >>> Container.register(ServiceNames.REPORT_WRITER, ReportWriter())
        >>> writer = Container.resolve(ServiceNames.REPORT_WRITER, ReportWriter)
    """

    _instance: Optional['Container'] = None
    _services: Dict[str, Any] = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._services = {}
        return cls._instance

    @classmethod
    def register(cls, name: str, instance: Any) -> None:
        """같은 이름으로 다시 등록하면 교체됩니다."""
        cls()._services[name] = instance

    @classmethod
    def resolve(cls, name: str, expected_type: Optional[Type[T]] = None) -> T:
        """
        서비스 조회

        Args:
            name: ServiceNames 상수
            expected_type: 주어지면 인스턴스 타입을 확인

        Raises:
            KeyError: 등록되지 않은 서비스
            TypeError: 등록된 인스턴스가 expected_type이 아님
        """
        services = cls()._services
        if name not in services:
            raise KeyError(f"Service '{name}' not registered in container")
        instance = services[name]
        if expected_type is not None and not isinstance(instance, expected_type):
            raise TypeError(f"Service '{name}' is {type(instance).__name__}, expected {expected_type.__name__}")
        return instance

    @classmethod
    def has(cls, name: str) -> bool:
        return name in cls()._services

    @classmethod
    def clear(cls) -> None:
        """모든 서비스 초기화 (명령 실행마다, 테스트용)"""
        cls()._services.clear()


class ServiceNames:
    """서비스 이름 상수"""

    # Infrastructure Layer
    COUNT_CACHE_REPOSITORY = "count_cache_repository"
    CURVE_CONFIG_REPOSITORY = "curve_config_repository"
    REPORT_WRITER = "report_writer"

    # Application Layer
    POINT_COUNT_SERVICE = "point_count_service"
    ANALYZE_CURVE_USE_CASE = "analyze_curve_use_case"
    VERIFY_SUITE_USE_CASE = "verify_suite_use_case"
    NUMBER_FIELD_USE_CASE = "number_field_use_case"
