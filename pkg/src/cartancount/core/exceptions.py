"""
[CC-A003] cartancount.core.exceptions
커스텀 예외 계층 구조

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations


class CartanCountError(Exception):  # [CC-A003.1]
    """cartancount 기본 예외. 모든 커스텀 예외의 부모."""


class GuardExceededError(CartanCountError):  # [CC-A003.2]
    """크기 가드 초과. 어떤 한도가 걸렸는지 bound에 설정 필드 이름으로 남깁니다."""

    def __init__(self, bound: str, limit: int, value: int, detail: str = "") -> None:
        self.bound = bound
        self.limit = limit
        self.value = value
        msg = f"가드 초과: {bound}={limit} < {value}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg + ". --force 로 무시할 수 있습니다.")


class MarginError(CartanCountError):  # [CC-A003.3]
    """행/열 합 조건 위반 (M(a,b,c,d) 밖의 행렬, 잘못된 MarginSpec)."""


class ShapeError(CartanCountError):  # [CC-A003.4]
    """행렬/파라미터 모양 에러."""


class ParamsError(CartanCountError):  # [CC-A003.5]
    """차원 강하 파라미터 또는 순열 관련 에러."""


class FormatError(CartanCountError):  # [CC-A003.6]
    """텍스트/JSON 입출력 형식 에러."""
