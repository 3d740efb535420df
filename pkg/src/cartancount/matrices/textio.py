"""
[CC-B006] cartancount.matrices.textio
행렬 텍스트 형식("rows cols" + 행별 공백 구분 정수)과 합동류 JSON

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from cartancount.core.exceptions import CartanCountError, FormatError
from cartancount.matrices.models import NatMatrix

if TYPE_CHECKING:
    from cartancount.matrices.models import CongruenceKey, MarginSpec


def format_matrix(matrix: NatMatrix) -> str:  # [CC-B006.1]
    """행렬을 텍스트 형식으로 씁니다. 각 줄은 개행으로 끝납니다."""
    lines = [f"{matrix.rows} {matrix.cols}"]
    lines.extend(" ".join(str(x) for x in matrix.row(i)) for i in range(matrix.rows))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> NatMatrix:  # [CC-B006.2]
    """텍스트 형식 행렬을 읽습니다. 형식 위반은 FormatError."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("[CC-B006.2] 빈 입력")
    try:
        rows, cols = (int(x) for x in lines[0].split())
        body = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise FormatError(f"[CC-B006.2] 정수가 아닌 토큰: {e}") from e
    if len(body) != rows or any(len(r) != cols for r in body):
        raise FormatError(f"[CC-B006.2] 헤더 {rows}x{cols}와 본문 모양이 다릅니다")
    try:
        return NatMatrix.from_rows(body)
    except CartanCountError as e:
        raise FormatError(f"[CC-B006.2] {e}") from e


def class_to_json(key: CongruenceKey, spec: MarginSpec) -> dict[str, Any]:  # [CC-B006.3]
    """{"canonical": [[...]], "spec": {"a":..,"b":..,"c":..,"d":..}}"""
    return {"canonical": key.canonical.to_rows(), "spec": spec.as_dict()}
