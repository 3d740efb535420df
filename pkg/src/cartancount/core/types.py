"""
[CC-A004] cartancount.core.types
공통 타입 정의

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from enum import StrEnum


class WreathSide(StrEnum):  # [CC-A004.1]
    """이중 잉여류의 두 화환곱 부분군.

    LEFT:  Sym(m×o) ⋌ Sym(n): 좌에서 곱함, 좌표 (1,3)과 각 (i,k) 파이버의 좌표 2
    RIGHT: Sym(m) ≀ Sym(n×o): 우에서 곱함, 좌표 (2,3)과 각 (j,k) 파이버의 좌표 1
    """

    LEFT = "left"
    RIGHT = "right"


class OutputFormat(StrEnum):  # [CC-A004.2]
    """CLI 출력 형식."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class CheckStatus(StrEnum):  # [CC-A004.3]
    """공식 검증 셀 상태."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


# 공통 타입 별칭
Row = tuple[int, ...]
Images = tuple[int, ...]
