"""
[CC-C004] cartancount.permutations.oracle
이중 잉여류 LEFT \\ Sym(m·n·o) / RIGHT 전수 계산 (독립 오라클)

Sym(N) 전체를 사전식 순서의 numpy 표로 만들고, 생성원 곱으로 이웃을 찾아
서로소 집합(union-find)으로 궤도를 합칩니다. 각 류의 대표는 사전식 최소 순열입니다.

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
dependencies: numpy>=2.1, structlog>=25.5
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
import structlog

from cartancount.core.config import GuardConfig
from cartancount.core.types import WreathSide
from cartancount.permutations.models import Params, TriplePermutation
from cartancount.permutations.wreath import wreath_generators, wreath_order

logger = structlog.get_logger()


class UnionFind:  # [CC-C004.1]
    """0..size-1 위의 서로소 집합. 크기 기준 합병 + 경로 절반화."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


@dataclass
class DoubleCosetResult:  # [CC-C004.2]
    """오라클 결과. representatives와 sizes는 같은 순서 (대표의 사전식 순서)."""

    params: Params
    flip_identified: bool
    representatives: list[TriplePermutation] = field(default_factory=list)
    sizes: list[int] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.representatives)

    @property
    def coset_count(self) -> int:
        """한쪽 잉여류 공간 Sym(m·n·o) / RIGHT 의 크기."""
        return sum(self.sizes) // wreath_order(self.params, WreathSide.RIGHT)


def _permutation_table(size: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    table = np.array(list(itertools.permutations(range(size))), dtype=np.int64).reshape(-1, size)
    weights = size ** np.arange(size - 1, -1, -1, dtype=np.int64)
    codes = table @ weights
    return table, weights, codes


def double_coset_classes(
    params: Params,
    *,
    identify_flip: bool = False,
    guards: GuardConfig | None = None,
) -> DoubleCosetResult:  # [CC-C004.3]
    """LEFT \\ Sym(I) / RIGHT 의 류를 모두 셉니다.

    Args:
        params: (m, n, o)
        identify_flip: True면 σ ~ ν∘σ⁻¹∘ν 도 합칩니다 (m == n 일 때만 의미 있음)
        guards: oracle_max_points 로 m·n·o를 제한

    Returns:
        류 대표와 크기. 크기의 합은 (m·n·o)!
    """
    guards = guards or GuardConfig()
    guards.enforce("oracle_max_points", params.size, detail=f"Sym({params.size}) 전수 오라클")
    flip = identify_flip and params.m == params.n

    table, weights, codes = _permutation_table(params.size)
    total = len(table)
    uf = UnionFind(total)

    def merge(neighbours: np.ndarray) -> None:
        targets = np.searchsorted(codes, neighbours @ weights).tolist()
        for x, y in enumerate(targets):
            uf.union(x, y)

    for g in wreath_generators(params, WreathSide.LEFT):
        if not g.is_identity():
            merge(np.asarray(g.images, dtype=np.int64)[table])  # g ∘ σ
    for h in wreath_generators(params, WreathSide.RIGHT):
        if not h.is_identity():
            merge(table[:, np.asarray(h.images, dtype=np.int64)])  # σ ∘ h
    if flip:
        nu = np.asarray(TriplePermutation.flip(params).images, dtype=np.int64)
        inverse = np.argsort(table, axis=1)
        merge(nu[inverse[:, nu]])  # ν ∘ σ⁻¹ ∘ ν

    first_index: dict[int, int] = {}
    sizes: dict[int, int] = {}
    for x in range(total):
        root = uf.find(x)
        if root not in first_index:
            first_index[root] = x
            sizes[root] = 0
        sizes[root] += 1

    result = DoubleCosetResult(params=params, flip_identified=flip)
    for root, index in sorted(first_index.items(), key=lambda item: item[1]):
        result.representatives.append(
            TriplePermutation(params, tuple(int(v) for v in table[index]))
        )
        result.sizes.append(sizes[root])
    logger.info(
        "double_coset_oracle_done",
        params=params.as_dict(),
        flip=flip,
        group_order=total,
        classes=result.count,
    )
    return result
