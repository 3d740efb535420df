"""
[CC-C003] cartancount.permutations.wreath
이중 잉여류의 좌/우 화환곱 부분군 생성원과 위수

LEFT  = Sym(m×o) ⋌ Sym(n): 좌표 (1,3)을 함께 치환 + (i,k) 파이버마다 좌표 2 치환
RIGHT = Sym(m) ≀ Sym(n×o): 좌표 (2,3)을 함께 치환 + (j,k) 파이버마다 좌표 1 치환

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence

from cartancount.core.config import GuardConfig
from cartancount.core.types import WreathSide
from cartancount.permutations.models import Params, TriplePermutation


def _swap(params: Params, pairs: Sequence[tuple[int, int]]) -> TriplePermutation:
    images = list(range(params.size))
    for x, y in pairs:
        images[x], images[y] = y, x
    return TriplePermutation(params, tuple(images))


def _left_generators(p: Params) -> list[TriplePermutation]:
    gens: list[TriplePermutation] = []
    # Sym(m×o): 사전식 인접 (i,k) 파이버 교환
    fibers = [(i, k) for i in range(p.m) for k in range(p.o)]
    for (i1, k1), (i2, k2) in zip(fibers, fibers[1:], strict=False):
        gens.append(_swap(p, [(p.flat(i1, j, k1), p.flat(i2, j, k2)) for j in range(p.n)]))
    # 파이버 (i,·,k) 안의 Sym(n)
    for i, k in fibers:
        for j in range(p.n - 1):
            gens.append(_swap(p, [(p.flat(i, j, k), p.flat(i, j + 1, k))]))
    return gens


def _right_generators(p: Params) -> list[TriplePermutation]:
    gens: list[TriplePermutation] = []
    fibers = [(j, k) for j in range(p.n) for k in range(p.o)]
    for (j1, k1), (j2, k2) in zip(fibers, fibers[1:], strict=False):
        gens.append(_swap(p, [(p.flat(i, j1, k1), p.flat(i, j2, k2)) for i in range(p.m)]))
    for j, k in fibers:
        for i in range(p.m - 1):
            gens.append(_swap(p, [(p.flat(i, j, k), p.flat(i + 1, j, k))]))
    return gens


def wreath_generators(params: Params, side: WreathSide) -> list[TriplePermutation]:  # [CC-C003.1]
    """인접 호환으로 이루어진 생성원 목록. 생성원이 없으면 [항등]."""
    gens = _left_generators(params) if side is WreathSide.LEFT else _right_generators(params)
    return gens or [TriplePermutation.identity(params)]


def wreath_order(params: Params, side: WreathSide) -> int:  # [CC-C003.2]
    """LEFT: (mo)!·(n!)^{mo},  RIGHT: (m!)^{no}·(no)!"""
    m, n, o = params.m, params.n, params.o
    if side is WreathSide.LEFT:
        return math.factorial(m * o) * math.factorial(n) ** (m * o)
    return math.factorial(m) ** (n * o) * math.factorial(n * o)


def generated_subgroup(
    generators: Sequence[TriplePermutation],
    params: Params,
    *,
    guards: GuardConfig | None = None,
) -> set[tuple[int, ...]]:  # [CC-C003.3]
    """생성원이 만드는 부분군의 원소(images 튜플) 전체. BFS 닫힘."""
    (guards or GuardConfig()).enforce("oracle_max_points", params.size, detail="부분군 닫힘")
    identity = tuple(range(params.size))
    elements = {identity}
    queue = deque([identity])
    gen_images = [g.images for g in generators]
    while queue:
        current = queue.popleft()
        for g in gen_images:
            nxt = tuple(g[y] for y in current)
            if nxt not in elements:
                elements.add(nxt)
                queue.append(nxt)
    return elements
