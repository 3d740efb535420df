"""
[CC-B003] cartancount.matrices.congruence
합동 표준형 - 행 배치 분기한정 + 열 셀 세분화, 작은 모양은 전수 탐색

합동: 행 치환 × 열 치환 (정사각이면 전치 포함).
표준형은 궤도 전체에서 행 우선 성분 열이 사전식 최소인 행렬입니다.

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
dependencies: structlog>=25.5
"""

from __future__ import annotations

import itertools
import math
from typing import TYPE_CHECKING

import structlog

from cartancount.core.config import GuardConfig
from cartancount.matrices.enumerate import iter_margin_matrices
from cartancount.matrices.models import CongruenceKey, NatMatrix

if TYPE_CHECKING:
    from cartancount.core.types import Row
    from cartancount.matrices.models import MarginSpec

logger = structlog.get_logger()

# 탐색 상태: (남은 행 인덱스, 열 셀의 순서 있는 분할)
_State = tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]


def _min_under_row_col(matrix: NatMatrix, guards: GuardConfig) -> tuple[int, ...]:  # [CC-B003.1]
    """행 치환 × 열 치환 궤도에서 사전식 최소 행 우선 열을 찾습니다.

    깊이 t에서 각 상태는 지금까지의 최소 접두부를 만드는 (남은 행, 열 셀 분할)입니다.
    남은 행 하나를 다음 행으로 고르면 셀 안에서만 열을 재배열할 수 있으므로 그 행의
    최선 배치는 셀별 오름차순 정렬이고, 같은 값끼리 셀이 다시 쪼개집니다.
    최소값을 내는 후보만 다음 깊이로 넘깁니다.
    """
    rows: list[Row] = [matrix.row(i) for i in range(matrix.rows)]
    states: list[_State] = [(tuple(range(matrix.rows)), (tuple(range(matrix.cols)),))]
    prefix: list[int] = []
    nodes = 0

    for _depth in range(matrix.rows):
        best: tuple[int, ...] | None = None
        children: dict[tuple, _State] = {}
        for remaining, cells in states:
            seen: set[Row] = set()
            for r in remaining:
                content = rows[r]
                if content in seen:
                    continue
                seen.add(content)
                nodes += 1
                if nodes > guards.canonical_node_budget:
                    guards.enforce(
                        "canonical_node_budget",
                        nodes,
                        detail=f"{matrix.rows}x{matrix.cols} 행렬 표준형",
                    )
                values: list[int] = []
                new_cells: list[tuple[int, ...]] = []
                for cell in cells:
                    ordered = sorted(cell, key=lambda col, content=content: (content[col], col))
                    values.extend(content[col] for col in ordered)
                    for _value, group in itertools.groupby(
                        ordered, key=lambda col, content=content: content[col]
                    ):
                        new_cells.append(tuple(group))
                candidate = tuple(values)
                if best is not None and candidate > best:
                    continue
                if best is None or candidate < best:
                    best = candidate
                    children = {}
                rest = tuple(x for x in remaining if x != r)
                # 셀 안의 열은 서로 바꿀 수 있으므로, 남은 행에 대한 열 벡터의 다중집합이 같으면
                # 이후 탐색이 동일하다.
                signature = tuple(
                    tuple(sorted(tuple(rows[x][col] for x in rest) for col in cell))
                    for cell in new_cells
                )
                children.setdefault((rest, signature), (rest, tuple(new_cells)))
        assert best is not None
        prefix.extend(best)
        states = list(children.values())

    return tuple(prefix)


def _min_exhaustive(matrix: NatMatrix) -> tuple[int, ...]:  # [CC-B003.2]
    """모든 행 치환 × 열 치환을 시도하는 기준 구현."""
    best: tuple[int, ...] | None = None
    col_perms = list(itertools.permutations(range(matrix.cols)))
    for row_order in itertools.permutations(range(matrix.rows)):
        picked = [matrix.row(r) for r in row_order]
        for col_order in col_perms:
            candidate = tuple(row[c] for row in picked for c in col_order)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return best


def canonical_form_exhaustive(matrix: NatMatrix, allow_transpose: bool) -> NatMatrix:  # [CC-B003.3]
    """전수 탐색 표준형. 작은 모양 전용 (테스트 오라클 겸용)."""
    best = _min_exhaustive(matrix)
    if allow_transpose and matrix.is_square:
        best = min(best, _min_exhaustive(matrix.transpose()))
    return NatMatrix(matrix.rows, matrix.cols, best)


def canonical_form(
    matrix: NatMatrix,
    allow_transpose: bool = True,
    *,
    guards: GuardConfig | None = None,
) -> NatMatrix:  # [CC-B003.4]
    """합동류의 표준 대표 (행 우선 사전식 최소).

    Args:
        matrix: 입력 행렬
        allow_transpose: 정사각일 때 전치 이동을 군에 포함할지 (비정사각이면 무시)
        guards: 노드 예산/전수 탐색 한도

    Returns:
        표준형 행렬 (멱등, 합동류 위에서 상수)
    """
    guards = guards or GuardConfig()
    group_size = math.factorial(matrix.rows) * math.factorial(matrix.cols)
    if group_size <= guards.exhaustive_limit:
        return canonical_form_exhaustive(matrix, allow_transpose)
    best = _min_under_row_col(matrix, guards)
    if allow_transpose and matrix.is_square:
        best = min(best, _min_under_row_col(matrix.transpose(), guards))
    return NatMatrix(matrix.rows, matrix.cols, best)


def are_congruent(
    first: NatMatrix,
    second: NatMatrix,
    *,
    allow_transpose: bool = True,
    guards: GuardConfig | None = None,
) -> bool:  # [CC-B003.5]
    """두 행렬의 합동 여부. 모양이 다르면 False (비정사각 전치 모양은 합동이 아님)."""
    if first.shape != second.shape:
        return False
    if sorted(first.entries) != sorted(second.entries):
        return False
    return canonical_form(first, allow_transpose, guards=guards) == canonical_form(
        second, allow_transpose, guards=guards
    )


def congruence_key(
    matrix: NatMatrix,
    *,
    allow_transpose: bool = True,
    guards: GuardConfig | None = None,
) -> CongruenceKey:  # [CC-B003.6]
    """정사각이고 allow_transpose면 전치 포함 군으로 표준화한 키."""
    allow = allow_transpose and matrix.is_square
    return CongruenceKey(canonical_form(matrix, allow, guards=guards), allow)


def enumerate_congruence_classes(
    spec: MarginSpec,
    *,
    allow_transpose: bool = True,
    guards: GuardConfig | None = None,
) -> list[CongruenceKey]:  # [CC-B003.7]
    """M(a,b,c,d)의 합동류마다 대표 하나, 표준형 행 우선 순서로 정렬.

    이중 사전식 정렬 행렬만 생성한 뒤 표준화하여 중복을 제거합니다.
    """
    guards = guards or GuardConfig()
    keys: set[CongruenceKey] = set()
    generated = 0
    for matrix in iter_margin_matrices(spec, doubly_sorted=True, guards=guards):
        generated += 1
        keys.add(congruence_key(matrix, allow_transpose=allow_transpose, guards=guards))
    result = sorted(keys, key=CongruenceKey.sort_key)
    logger.info(
        "congruence_classes_found",
        spec=spec.as_dict(),
        generated=generated,
        classes=len(result),
    )
    return result
