"""
[CC-B001] cartancount.matrices.models
자연수 행렬, 행/열 합 명세, 합동류 키, 블록 프로파일

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from cartancount.core.exceptions import MarginError, ShapeError
from cartancount.core.types import Row


@dataclass(frozen=True, slots=True)
class NatMatrix:  # [CC-B001.1]
    """자연수 성분 직사각 행렬. 성분은 행 우선(row-major) 튜플로 보관합니다."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"[CC-B001.1] 행/열 수는 양수여야 합니다: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"[CC-B001.1] 성분 개수 {len(self.entries)} != {self.rows}·{self.cols}"
            )
        if any(e < 0 for e in self.entries):
            raise ShapeError("[CC-B001.1] 음수 성분은 허용되지 않습니다")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> NatMatrix:  # [CC-B001.2]
        """행 리스트에서 행렬을 만듭니다. 행 길이가 다르면 ShapeError."""
        if not rows or not rows[0]:
            raise ShapeError("[CC-B001.2] 빈 행렬은 허용되지 않습니다")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("[CC-B001.2] 행 길이가 서로 다릅니다")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Row:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Row:
        return self.entries[j :: self.cols]

    def to_rows(self) -> list[list[int]]:  # [CC-B001.3]
        """중첩 리스트로 변환 (JSON 출력용)."""
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> NatMatrix:  # [CC-B001.4]
        """전치 행렬."""
        return NatMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def row_sums(self) -> Row:
        return tuple(sum(self.row(i)) for i in range(self.rows))

    def col_sums(self) -> Row:
        return tuple(sum(self.col(j)) for j in range(self.cols))

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> NatMatrix:  # [CC-B001.5]
        """B[r][c] = A[row_order[r]][col_order[c]] 인 행렬.

        합동 작용 ρ1·A·ρ2 는 이 함수로 실현합니다: B의 행들은 A의 행을 ρ1⁻¹로 재색인한
        것이고 열들은 ρ2로 재색인한 것입니다.
        """
        if sorted(row_order) != list(range(self.rows)) or sorted(col_order) != list(
            range(self.cols)
        ):
            raise ShapeError("[CC-B001.5] 순서가 순열이 아닙니다")
        return NatMatrix(
            self.rows,
            self.cols,
            tuple(self.entries[r * self.cols + c] for r in row_order for c in col_order),
        )

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return self.rows, self.cols, self.entries


@dataclass(frozen=True, slots=True)
class MarginSpec:  # [CC-B001.6]
    """M(a,b,c,d): a×c 자연수 행렬, 모든 행 합 b, 모든 열 합 d.

    a·b != c·d 이면 공집합이므로 생성 시 거부합니다. b = d = 0 은 영행렬 하나를 허용합니다.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.c < 1:
            raise MarginError(f"[CC-B001.6] 행/열 수는 양수여야 합니다: a={self.a}, c={self.c}")
        if self.b < 0 or self.d < 0:
            raise MarginError(f"[CC-B001.6] 합은 음수일 수 없습니다: b={self.b}, d={self.d}")
        if self.a * self.b != self.c * self.d:
            raise MarginError(
                f"[CC-B001.6] M({self.a},{self.b},{self.c},{self.d})는 공집합입니다: "
                f"a·b={self.a * self.b} != c·d={self.c * self.d}"
            )

    def swapped(self) -> MarginSpec:
        """전치에 대응하는 명세 M(c,d,a,b)."""
        return MarginSpec(self.c, self.d, self.a, self.b)

    def contains(self, matrix: NatMatrix) -> bool:  # [CC-B001.7]
        """행렬이 M(a,b,c,d)에 속하는지."""
        return (
            matrix.shape == (self.a, self.c)
            and all(s == self.b for s in matrix.row_sums())
            and all(s == self.d for s in matrix.col_sums())
        )

    def require(self, matrix: NatMatrix) -> None:
        """속하지 않으면 MarginError."""
        if not self.contains(matrix):
            raise MarginError(
                f"[CC-B001.7] 행렬({matrix.rows}x{matrix.cols}, 행 합 {matrix.row_sums()}, "
                f"열 합 {matrix.col_sums()})이 M({self.a},{self.b},{self.c},{self.d})에 없습니다"
            )

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True, slots=True)
class CongruenceKey:  # [CC-B001.8]
    """합동류의 해시 가능한 대표. canonical은 canonical_form의 고정점."""

    canonical: NatMatrix
    transpose_allowed: bool

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return self.canonical.sort_key()


@dataclass(frozen=True, slots=True)
class BlockProfile:  # [CC-B001.9]
    """M(2o,2,2o,2) 블록 대각 표준형의 블록 크기 다중집합 (오름차순)."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.sizes):
            raise ShapeError(f"[CC-B001.9] 블록 크기는 양수여야 합니다: {self.sizes}")
        if list(self.sizes) != sorted(self.sizes):
            raise ShapeError(f"[CC-B001.9] 블록 크기는 오름차순이어야 합니다: {self.sizes}")

    @classmethod
    def of(cls, sizes: Iterable[int]) -> BlockProfile:
        return cls(tuple(sorted(sizes)))

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def block_count(self) -> int:
        return len(self.sizes)
