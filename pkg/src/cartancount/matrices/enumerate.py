"""
[CC-B002] cartancount.matrices.enumerate
M(a,b,c,d) 백트래킹 열거 - 행 우선, 잔여 열 합 유지, 오름차순 후보

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
dependencies: structlog>=25.5
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from typing import TYPE_CHECKING

import structlog

from cartancount.core.config import GuardConfig
from cartancount.matrices.models import NatMatrix

if TYPE_CHECKING:
    from cartancount.core.types import Row
    from cartancount.matrices.models import MarginSpec

logger = structlog.get_logger()


def check_enumeration_guards(spec: MarginSpec, guards: GuardConfig | None = None) -> None:  # [CC-B002.1]
    """a·c 와 b 에 대한 소프트 가드를 확인합니다."""
    guards = guards or GuardConfig()
    label = f"M({spec.a},{spec.b},{spec.c},{spec.d})"
    guards.enforce("max_matrix_cells", spec.a * spec.c, detail=f"{label}의 a·c")
    guards.enforce("max_row_sum", spec.b, detail=f"{label}의 b")


def _rows_for(
    total: int,
    residual: list[int],
    upper: Row | None,
    ties: list[bool] | None,
) -> Iterator[Row]:  # [CC-B002.2]
    """합이 total이고 열 j 성분이 residual[j] 이하인 행을 사전식 오름차순으로 생성합니다.

    upper가 주어지면 행이 upper 이하(사전식)여야 하고, ties[j]가 참이면
    row[j] >= row[j+1] 이어야 합니다 (이중 사전식 정렬 조건).
    """
    width = len(residual)
    suffix = [0] * (width + 1)
    for j in range(width - 1, -1, -1):
        suffix[j] = suffix[j + 1] + residual[j]
    row = [0] * width

    def fill(j: int, left: int, below_upper: bool) -> Iterator[Row]:
        if j == width - 1:
            value = left
            if value > residual[j]:
                return
            if ties is not None and j > 0 and ties[j - 1] and value > row[j - 1]:
                return
            if upper is not None and not below_upper and value > upper[j]:
                return
            row[j] = value
            yield tuple(row)
            return
        lowest = max(0, left - suffix[j + 1])
        highest = min(left, residual[j])
        if ties is not None and j > 0 and ties[j - 1]:
            highest = min(highest, row[j - 1])
        if upper is not None and not below_upper:
            highest = min(highest, upper[j])
        for value in range(lowest, highest + 1):
            row[j] = value
            yield from fill(j + 1, left - value, below_upper or (upper is not None and value < upper[j]))

    if width == 0:
        return
    yield from fill(0, total, False)


def iter_margin_matrices(
    spec: MarginSpec,
    *,
    doubly_sorted: bool = False,
    guards: GuardConfig | None = None,
) -> Iterator[NatMatrix]:  # [CC-B002.3]
    """M(a,b,c,d)의 행렬을 결정적 사전식(행 우선) 순서로 생성합니다.

    Args:
        spec: 행/열 합 명세
        doubly_sorted: 참이면 행과 열이 모두 사전식 비증가인 행렬만 생성
            (각 행/열 치환 궤도의 사전식 최대 원소가 이 조건을 만족하므로
            합동류 열거의 동형 제거에 쓸 수 있음)
        guards: 크기 가드

    Yields:
        NatMatrix
    """
    check_enumeration_guards(spec, guards)
    a, b, c = spec.a, spec.b, spec.c
    rows: list[Row] = []

    def place(depth: int, residual: list[int], ties: list[bool] | None) -> Iterator[NatMatrix]:
        if depth == a:
            yield NatMatrix(a, c, tuple(x for r in rows for x in r))
            return
        upper = rows[-1] if doubly_sorted and rows else None
        for row in _rows_for(b, residual, upper, ties):
            rows.append(row)
            next_residual = [residual[j] - row[j] for j in range(c)]
            next_ties = None
            if ties is not None:
                next_ties = [ties[j] and row[j] == row[j + 1] for j in range(c - 1)]
            yield from place(depth + 1, next_residual, next_ties)
            rows.pop()

    initial_ties = [True] * (c - 1) if doubly_sorted else None
    yield from place(0, [spec.d] * c, initial_ties)


def enumerate_margin_matrices(
    spec: MarginSpec,
    visit: Callable[[NatMatrix], object],
    *,
    guards: GuardConfig | None = None,
) -> int:  # [CC-B002.4]
    """M(a,b,c,d)의 모든 행렬을 정확히 한 번씩 방문하고 방문 수를 반환합니다."""
    count = 0
    for matrix in iter_margin_matrices(spec, guards=guards):
        visit(matrix)
        count += 1
    logger.info("margin_enumeration_done", spec=spec.as_dict(), count=count)
    return count
