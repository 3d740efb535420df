"""
[CC-A002] cartancount.core.config
pydantic-settings 기반 가드/실행 설정 관리

YAML 파일(cartancount.yaml)이 있으면 환경변수보다 우선합니다.

version: 1.1.0
created: 2026-10-17
modified: 2026-10-17
dependencies: pydantic-settings>=2.13, pyyaml>=6.0, structlog>=25.5
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any

import structlog
import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from cartancount.core.exceptions import GuardExceededError

if TYPE_CHECKING:
    from pydantic.fields import FieldInfo

logger = structlog.get_logger()


class _WithoutForce(PydanticBaseSettingsSource):
    """감싼 소스에서 force 값을 지웁니다. 가드 해제는 명시적 인자로만 합니다."""

    def __init__(
        self, settings_cls: type[BaseSettings], inner: PydanticBaseSettingsSource
    ) -> None:
        super().__init__(settings_cls)
        self._inner = inner

    def get_field_value(self, field: FieldInfo, field_name: str) -> tuple[Any, str, bool]:
        return self._inner.get_field_value(field, field_name)

    def __call__(self) -> dict[str, Any]:
        data = self._inner()
        data.pop("force", None)
        nested = data.get("guards")
        if isinstance(nested, dict):
            nested.pop("force", None)
        return data


def _sources_without_force(
    settings_cls: type[BaseSettings],
    init_settings: PydanticBaseSettingsSource,
    env_settings: PydanticBaseSettingsSource,
    dotenv_settings: PydanticBaseSettingsSource,
    file_secret_settings: PydanticBaseSettingsSource,
) -> tuple[PydanticBaseSettingsSource, ...]:
    return (
        init_settings,
        _WithoutForce(settings_cls, env_settings),
        _WithoutForce(settings_cls, dotenv_settings),
        file_secret_settings,
    )


class GuardConfig(BaseSettings):  # [CC-A002.1]
    """소프트 크기 가드.

    force=True 이면 모든 가드를 통과시킵니다 (연구용).
    force는 환경 변수로 켤 수 없습니다.
    """

    model_config = SettingsConfigDict(env_prefix="CARTAN_COUNT_")

    max_matrix_cells: int = Field(default=100, ge=1, description="행렬 열거 a·c 상한")
    max_row_sum: int = Field(default=16, ge=0, description="행렬 열거 b 상한")
    oracle_max_points: int = Field(default=9, ge=1, description="이중 잉여류 오라클 m·n·o 상한")
    iso_max_vertices: int = Field(default=16, ge=1, description="동형 판정 꼭짓점 합 상한")
    canonical_node_budget: int = Field(default=200_000, ge=1, description="표준형 탐색 노드 예산")
    exhaustive_limit: int = Field(
        default=576, ge=1, description="rows!·cols! 이하이면 전수 탐색으로 표준형 계산"
    )
    partition_bound: int = Field(default=64, ge=0, description="분할수 p(k)의 k 상한")
    force: bool = Field(default=False, description="가드 무시")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return _sources_without_force(
            settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
        )

    def enforce(self, bound: str, value: int, detail: str = "") -> None:  # [CC-A002.2]
        """value가 bound 필드 값을 넘으면 GuardExceededError를 발생시킵니다."""
        limit = getattr(self, bound)
        if value <= limit or self.force:
            return
        logger.warning("guard_exceeded", bound=bound, limit=limit, value=value, detail=detail)
        raise GuardExceededError(bound, limit, value, detail)


class CartanCountConfig(BaseSettings):  # [CC-A002.3]
    """cartancount 메인 설정. 가드 설정을 포함."""

    model_config = SettingsConfigDict(
        env_prefix="CARTAN_COUNT_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    threads: int = Field(default=1, ge=1, description="내부 병렬 작업자 수 상한")
    log_level: str = Field(default="WARNING")
    config_file: str = Field(default="cartancount.yaml", description="YAML 설정 파일 경로")
    guards: GuardConfig = Field(default_factory=GuardConfig)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return _sources_without_force(
            settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
        )


def load_config(path: Path | None = None, **overrides: Any) -> CartanCountConfig:  # [CC-A002.4]
    """설정을 로드합니다. YAML 파일 우선, 없으면 환경변수/기본값.

    Args:
        path: YAML 파일 경로 (None이면 config_file 기본값)
        overrides: 명시적 값 (가장 우선)

    Returns:
        병합된 설정
    """
    base = CartanCountConfig()
    config_path = path or Path(base.config_file)
    data: dict[str, Any] = {}
    if config_path.exists():
        with config_path.open(encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
        if isinstance(loaded, dict):
            data = loaded
            logger.info("config_loaded_from_yaml", path=str(config_path), keys=sorted(data))

    guard_values = {**base.guards.model_dump(), **(data.get("guards") or {})}
    guard_values.pop("force", None)
    guard_values.update(overrides.pop("guards", {}) or {})
    merged = {
        "threads": data.get("threads", base.threads),
        "log_level": data.get("log_level", base.log_level),
        "config_file": str(config_path),
        **overrides,
    }
    return CartanCountConfig(guards=GuardConfig(**guard_values), **merged)


def _stderr_logger(*_args: Any) -> structlog.PrintLogger:
    # 호출 시점의 sys.stderr (테스트 러너가 스트림을 바꿔 끼움)
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: str = "WARNING") -> None:  # [CC-A002.5]
    """structlog을 stderr 출력 + 레벨 필터로 설정합니다. stdout은 결과 전용."""
    numeric = logging.getLevelNamesMapping().get(level.upper(), logging.WARNING)
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )
