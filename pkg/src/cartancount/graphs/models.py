"""
[CC-D001] cartancount.graphs.models
스펙트럼 모델 그래프: 이분 다중그래프, 일반 다중그래프, 위상동형 지문

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from cartancount.core.exceptions import ShapeError
from cartancount.matrices.models import NatMatrix

Edge = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Multigraph:  # [CC-D001.1]
    """꼭짓점 0..vertex_count-1, 무향 다중 간선. 고리 (v,v)는 차수에 2를 더합니다.

    edges는 (u ≤ v) 쌍의 정렬된 튜플이라 같은 라벨의 그래프는 == 로 비교됩니다.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ShapeError(f"[CC-D001.1] 꼭짓점 수는 음수일 수 없습니다: {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u <= v < self.vertex_count):
                raise ShapeError(f"[CC-D001.1] 잘못된 간선 ({u},{v}) / {self.vertex_count} 꼭짓점")
        if list(self.edges) != sorted(self.edges):
            raise ShapeError("[CC-D001.1] 간선은 정렬되어 있어야 합니다 (from_edges 사용)")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> Multigraph:  # [CC-D001.2]
        """임의 순서/방향의 간선 목록에서 정규화된 다중그래프를 만듭니다."""
        return cls(vertex_count, tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    @classmethod
    def empty(cls) -> Multigraph:
        return cls(0, ())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def valency(self, vertex: int) -> int:
        return sum((u == vertex) + (v == vertex) for u, v in self.edges)

    def valencies(self) -> list[int]:
        result = [0] * self.vertex_count
        for u, v in self.edges:
            result[u] += 1
            result[v] += 1
        return result

    def loop_count(self, vertex: int) -> int:
        return sum(1 for u, v in self.edges if u == v == vertex)

    def multiplicity(self) -> list[list[int]]:
        """대칭 다중도 행렬. 대각 성분은 고리 개수."""
        adj = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for (u, v), mult in Counter(self.edges).items():
            adj[u][v] = mult
            adj[v][u] = mult
        return adj

    def sort_key(self) -> tuple[int, tuple[Edge, ...]]:
        return self.vertex_count, self.edges


@dataclass(frozen=True, slots=True)
class BipartiteMultigraph:  # [CC-D001.3]
    """행렬 A의 이분 그래프. 행 꼭짓점 i와 열 꼭짓점 j 사이에 A[i][j]개의 평행 간선."""

    row_count: int
    col_count: int
    multiplicity: NatMatrix

    def __post_init__(self) -> None:
        if self.multiplicity.shape != (self.row_count, self.col_count):
            raise ShapeError(
                f"[CC-D001.3] 다중도 행렬 {self.multiplicity.shape} != "
                f"({self.row_count}, {self.col_count})"
            )

    @property
    def vertex_count(self) -> int:
        return self.row_count + self.col_count

    @property
    def edge_count(self) -> int:
        return sum(self.multiplicity.entries)

    def row_vertex(self, i: int) -> int:
        return i

    def col_vertex(self, j: int) -> int:
        return self.row_count + j

    def label(self, vertex: int) -> str:
        """DOT/로그용 1-기반 라벨 r1..rA, c1..cC."""
        if vertex < self.row_count:
            return f"r{vertex + 1}"
        return f"c{vertex - self.row_count + 1}"

    def valency(self, vertex: int) -> int:
        if vertex < self.row_count:
            return self.multiplicity.row_sums()[vertex]
        return self.multiplicity.col_sums()[vertex - self.row_count]

    def iter_edges(self) -> list[Edge]:
        """(행 꼭짓점, 열 꼭짓점) 쌍, 평행 간선은 반복. 행 우선 순서."""
        edges: list[Edge] = []
        for i in range(self.row_count):
            for j in range(self.col_count):
                edges.extend([(i, self.row_count + j)] * self.multiplicity[i, j])
        return edges

    def to_multigraph(self) -> Multigraph:  # [CC-D001.4]
        """이분 구분을 잊은 일반 다중그래프."""
        return Multigraph.from_edges(self.vertex_count, self.iter_edges())


@dataclass(frozen=True, slots=True)
class HomeoType:  # [CC-D001.5]
    """위상동형 지문: 원 성분 개수 + 매끄럽게 한 나머지 그래프의 표준형."""

    circle_count: int
    core: Multigraph

    def sort_key(self) -> tuple[int, int, tuple[Edge, ...]]:
        return self.circle_count, *self.core.sort_key()

    def __lt__(self, other: HomeoType) -> bool:
        return self.sort_key() < other.sort_key()
