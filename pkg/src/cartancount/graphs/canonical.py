"""
[CC-D003] cartancount.graphs.canonical
다중그래프 표준형 (개별화-세분화 탐색) 과 동형 판정

연결 성분마다 따로 표준화하고 (크기, 코드) 순으로 이어 붙입니다.
성분 안에서는 초기 셀을 (차수, 고리 수)로 나누고, 각 셀을 "다른 셀들로 가는 다중도의
정렬된 다중집합" 서명으로 안정될 때까지 쪼갭니다. 이산 분할(잎)마다 상삼각 다중도 열을
만들고 최소를 고릅니다. 서로 바꿔도 그래프가 그대로인 쌍둥이 꼭짓점은 한 번만 개별화합니다.

version: 1.1.0
created: 2026-10-17
modified: 2026-10-17
dependencies: structlog>=25.5
"""

from __future__ import annotations

from dataclasses import dataclass

import structlog

from cartancount.core.config import GuardConfig
from cartancount.graphs.construct import connected_components
from cartancount.graphs.models import BipartiteMultigraph, Multigraph

logger = structlog.get_logger()

_Cells = list[tuple[int, ...]]
_Code = tuple[int, ...]


@dataclass
class _LeafBudget:
    guards: GuardConfig
    detail: str
    leaves: int = 0

    def tick(self) -> None:
        self.leaves += 1
        if self.leaves > self.guards.canonical_node_budget:
            self.guards.enforce("canonical_node_budget", self.leaves, detail=self.detail)


def _refine(cells: _Cells, adj: list[list[int]]) -> _Cells:
    while True:
        refined: _Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signatures = {
                v: tuple(tuple(sorted(adj[v][u] for u in other)) for other in cells) for v in cell
            }
            for sig in sorted(set(signatures.values())):
                refined.append(tuple(v for v in cell if signatures[v] == sig))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _initial_cells(adj: list[list[int]]) -> _Cells:
    keyed: dict[tuple[int, int], list[int]] = {}
    for v, row in enumerate(adj):
        keyed.setdefault((sum(row) + row[v], row[v]), []).append(v)
    return [tuple(keyed[key]) for key in sorted(keyed)]


def _swappable(adj: list[list[int]], u: int, v: int) -> bool:
    """u, v 교환이 자기동형인지 (쌍둥이)."""
    if adj[u][u] != adj[v][v]:
        return False
    return all(adj[u][x] == adj[v][x] for x in range(len(adj)) if x not in (u, v))


def _canonical_order(adj: list[list[int]], budget: _LeafBudget) -> tuple[_Code, list[int]]:
    size = len(adj)
    best: tuple[_Code, list[int]] | None = None

    def search(cells: _Cells) -> None:
        nonlocal best
        cells = _refine(cells, adj)
        target = next((idx for idx, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            budget.tick()
            order = [cell[0] for cell in cells]
            code = tuple(adj[order[a]][order[b]] for a in range(size) for b in range(a, size))
            if best is None or code < best[0]:
                best = (code, order)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # 쌍둥이는 한 번만
            if any(_swappable(adj, u, v) for u in tried):
                continue
            tried.append(v)
            rest = tuple(u for u in cell if u != v)
            search([*cells[:target], (v,), rest, *cells[target + 1 :]])

    search(_initial_cells(adj))
    assert best is not None
    return best


def canonical_multigraph(
    graph: Multigraph | BipartiteMultigraph,
    *,
    guards: GuardConfig | None = None,
) -> Multigraph:  # [CC-D003.1]
    """동형류의 표준 대표. 같은 동형류의 그래프는 == 인 결과를 냅니다.

    Raises:
        GuardExceededError: 잎 개수(성분 합)가 canonical_node_budget을 넘을 때
    """
    if isinstance(graph, BipartiteMultigraph):
        graph = graph.to_multigraph()
    size = graph.vertex_count
    if size == 0:
        return graph
    adj = graph.multiplicity()
    budget = _LeafBudget(guards or GuardConfig(), f"{size}-꼭짓점 그래프 표준형")
    parts: list[tuple[tuple[int, _Code], list[int]]] = []
    for component in connected_components(graph):
        vertices = sorted(component)
        local = [[adj[u][v] for v in vertices] for u in vertices]
        code, order = _canonical_order(local, budget)
        parts.append(((len(vertices), code), [vertices[i] for i in order]))
    parts.sort(key=lambda part: part[0])
    position = {v: idx for idx, v in enumerate(v for _, order in parts for v in order)}
    logger.debug(
        "canonical_multigraph_done", vertices=size, components=len(parts), leaves=budget.leaves
    )
    return Multigraph.from_edges(size, ((position[u], position[v]) for u, v in graph.edges))


def are_isomorphic(
    first: Multigraph | BipartiteMultigraph,
    second: Multigraph | BipartiteMultigraph,
    *,
    guards: GuardConfig | None = None,
) -> bool:  # [CC-D003.2]
    """간선 다중집합(고리 포함)을 보존하는 꼭짓점 전단사가 있는지.

    Raises:
        GuardExceededError: 두 그래프의 꼭짓점 수 합이 iso_max_vertices를 넘을 때
    """
    guards = guards or GuardConfig()
    if isinstance(first, BipartiteMultigraph):
        first = first.to_multigraph()
    if isinstance(second, BipartiteMultigraph):
        second = second.to_multigraph()
    guards.enforce(
        "iso_max_vertices",
        first.vertex_count + second.vertex_count,
        detail="동형 판정 꼭짓점 합",
    )
    if first is second or first == second:
        return True
    if first.vertex_count != second.vertex_count or first.edge_count != second.edge_count:
        return False
    if sorted(first.valencies()) != sorted(second.valencies()):
        return False
    return canonical_multigraph(first, guards=guards) == canonical_multigraph(second, guards=guards)
