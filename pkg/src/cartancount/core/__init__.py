"""
[CC-A001] cartancount.core
설정, 예외, 공통 타입

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from cartancount.core.config import CartanCountConfig, GuardConfig, configure_logging, load_config
from cartancount.core.exceptions import (
    CartanCountError,
    FormatError,
    GuardExceededError,
    MarginError,
    ParamsError,
    ShapeError,
)
from cartancount.core.types import WreathSide

__all__ = [
    "CartanCountConfig",
    "CartanCountError",
    "FormatError",
    "GuardConfig",
    "GuardExceededError",
    "MarginError",
    "ParamsError",
    "ShapeError",
    "WreathSide",
    "configure_logging",
    "load_config",
]
