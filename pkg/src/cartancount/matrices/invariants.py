"""
[CC-B004] cartancount.matrices.invariants
닫힌 형태 불변량 - M(2o,2,2o,2) 블록 표준형, M(2,n,n,2)의 2-성분 개수

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from cartancount.core.exceptions import MarginError
from cartancount.matrices.models import BlockProfile, MarginSpec, NatMatrix


def block_normal_form(matrix: NatMatrix) -> BlockProfile:  # [CC-B004.1]
    """M(2o,2,2o,2) 행렬의 블록 대각 표준형 블록 크기.

    아직 쓰지 않은 첫 행에서 0이 아닌 성분을 (1,1)에 놓습니다. 성분이 2이면 1×1 블록이
    닫힙니다. 아니면 1-성분 사슬을 따라 행과 열을 번갈아 이어 가고, 시작 열로 돌아오면
    k×k 블록이 닫힙니다. 남은 행에 대해 반복합니다.
    """
    if matrix.rows != matrix.cols or matrix.rows % 2:
        raise MarginError(
            f"[CC-B004.1] 2o×2o 정사각 행렬이 필요합니다: {matrix.rows}x{matrix.cols}"
        )
    MarginSpec(matrix.rows, 2, matrix.cols, 2).require(matrix)

    size = matrix.rows
    row_support = [[j for j in range(size) if matrix[i, j]] for i in range(size)]
    col_support = [[i for i in range(size) if matrix[i, j]] for j in range(size)]
    used = [False] * size
    blocks: list[int] = []

    for start in range(size):
        if used[start]:
            continue
        used[start] = True
        first_col = row_support[start][0]
        if matrix[start, first_col] == 2:
            blocks.append(1)
            continue
        # 사슬: 행 → 다른 열 → 그 열의 다른 행 → ... → 시작 열
        k = 1
        current_row, entered_col = start, first_col
        while True:
            next_col = next(c for c in row_support[current_row] if c != entered_col)
            if next_col == first_col:
                break
            next_row = next(r for r in col_support[next_col] if r != current_row)
            used[next_row] = True
            current_row, entered_col = next_row, next_col
            k += 1
        blocks.append(k)

    return BlockProfile.of(blocks)


def chain_block(k: int) -> list[list[int]]:  # [CC-B004.2]
    """k×k 표준 블록: (2), [[1,1],[1,1]], 그리고 k≥3 사슬 블록."""
    if k == 1:
        return [[2]]
    block = [[0] * k for _ in range(k)]
    block[0][0] = block[0][1] = 1
    for t in range(1, k - 1):
        block[t][t - 1] = block[t][t + 1] = 1
    block[k - 1][k - 2] = block[k - 1][k - 1] = 1
    return block


def normal_form_matrix(profile: BlockProfile) -> NatMatrix:  # [CC-B004.3]
    """블록 프로파일에서 블록 대각 표준형 행렬을 만듭니다 (크기 오름차순 배치)."""
    size = profile.total
    rows = [[0] * size for _ in range(size)]
    offset = 0
    for k in profile.sizes:
        for i, line in enumerate(chain_block(k)):
            rows[offset + i][offset : offset + k] = line
        offset += k
    return NatMatrix.from_rows(rows)


def two_entry_invariant(matrix: NatMatrix) -> int:  # [CC-B004.4]
    """M(2,n,n,2)에서 성분 2의 개수. 합동류의 완전 불변량이며 항상 짝수."""
    if matrix.rows != 2:
        raise MarginError(f"[CC-B004.4] 2×n 행렬이 필요합니다: {matrix.rows}x{matrix.cols}")
    n = matrix.cols
    MarginSpec(2, n, n, 2).require(matrix)
    return sum(1 for e in matrix.entries if e == 2)


def two_entry_normal_form(n: int, invariant: int) -> NatMatrix:  # [CC-B004.5]
    """불변량이 invariant인 M(2,n,n,2)의 표준형: 첫 행 2…2 0…0 1…1, 둘째 행은 2의 보수."""
    if invariant % 2 or not 0 <= invariant <= 2 * (n // 2):
        raise MarginError(f"[CC-B004.5] n={n}에 대해 불가능한 불변량: {invariant}")
    k = invariant // 2
    top = [2] * k + [0] * k + [1] * (n - 2 * k)
    return NatMatrix.from_rows([top, [2 - x for x in top]])
