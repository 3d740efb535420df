"""
[CC-T000] tests.conftest
공통 테스트 픽스처

version: 1.1.0
created: 2026-10-17
"""

import pytest
import structlog

from cartancount.core.config import GuardConfig, configure_logging
from cartancount.permutations.models import Params


@pytest.fixture(autouse=True)
def _quiet_logging() -> None:
    """테스트마다 structlog을 초기화하고 WARNING 이상만 stderr로."""
    structlog.reset_defaults()
    configure_logging("WARNING")


@pytest.fixture
def guards() -> GuardConfig:
    """기본 가드 설정."""
    return GuardConfig()


@pytest.fixture
def forced_guards() -> GuardConfig:
    """모든 가드를 무시하는 설정."""
    return GuardConfig(force=True)


@pytest.fixture
def params_221() -> Params:
    return Params(2, 2, 1)
